//! Grid specs for sweep parameters: `0.5`, `0.25,0.5,0.75` or `lo:hi:count`.

use crate::ConfigError;

#[derive(Debug, Clone, PartialEq)]
pub struct Grid(Vec<f64>);

impl Grid {
    /// Parsed values, sorted ascending without duplicates.
    pub fn parse(spec: &str, name: &str) -> Result<Self, ConfigError> {
        let bad = |why: String| ConfigError(format!("{name} grid {spec:?}: {why}"));
        let num = |x: &str| {
            x.trim()
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| bad(format!("{x:?} is not a finite number")))
        };
        let mut v = if spec.contains(':') {
            let parts: Vec<&str> = spec.split(':').collect();
            if parts.len() != 3 {
                return Err(bad("expected lo:hi:count".into()));
            }
            let (lo, hi) = (num(parts[0])?, num(parts[1])?);
            let n: usize = parts[2]
                .trim()
                .parse()
                .map_err(|_| bad("count must be a positive integer".into()))?;
            if n == 0 {
                return Err(bad("grids must be nonempty".into()));
            }
            if n == 1 {
                if lo != hi {
                    return Err(bad("count 1 needs lo = hi".into()));
                }
                vec![lo]
            } else {
                if !(lo < hi) {
                    return Err(bad("need lo < hi".into()));
                }
                (0..n)
                    .map(|i| {
                        if i + 1 == n {
                            hi
                        } else {
                            lo + (hi - lo) * i as f64 / (n - 1) as f64
                        }
                    })
                    .collect()
            }
        } else {
            spec.split(',')
                .filter(|x| !x.trim().is_empty())
                .map(num)
                .collect::<Result<Vec<_>, _>>()?
        };
        if v.is_empty() {
            return Err(bad("grids must be nonempty".into()));
        }
        v.sort_by(f64::total_cmp);
        v.dedup();
        Ok(Grid(v))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn positive(self, name: &str) -> Result<Vec<f64>, ConfigError> {
        match self.0.iter().find(|&&x| !(x > 0.0)) {
            Some(x) => Err(ConfigError(format!(
                "invalid parameter: {name} > 0 violated ({name} = {x})"
            ))),
            None => Ok(self.0),
        }
    }
}
