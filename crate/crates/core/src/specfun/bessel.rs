use crate::error::{Error, Result};
use crate::specfun::gamma::ln_gamma_value;
use crate::specfun::EvalResult;
use crate::Real;

// Taylor coefficients of 1/Γ(1+x) about 0.
const RGAMMA1: [f64; 27] = [
    1.0,
    0.577_215_664_901_532_860_61,
    -0.655_878_071_520_253_881_08,
    -0.042_002_635_034_095_235_529,
    0.166_538_611_382_291_489_5,
    -0.042_197_734_555_544_336_748,
    -0.009_621_971_527_876_973_562_1,
    0.007_218_943_246_663_099_542_4,
    -0.001_165_167_591_859_065_112_1,
    -0.000_215_241_674_114_950_972_82,
    0.000_128_050_282_388_116_186_15,
    -0.000_020_134_854_780_788_238_656,
    -1.250_493_482_142_670_657_3e-6,
    1.133_027_231_981_695_882_4e-6,
    -2.056_338_416_977_607_103_5e-7,
    6.116_095_104_481_415_817_9e-9,
    5.002_007_644_469_222_930_1e-9,
    -1.181_274_570_487_020_144_6e-9,
    1.043_426_711_691_100_510_5e-10,
    7.782_263_439_905_071_254e-12,
    -3.696_805_618_642_205_708_2e-12,
    5.100_370_287_454_475_979e-13,
    -2.058_326_053_566_506_783_2e-14,
    -5.348_122_539_423_017_982_4e-15,
    1.226_778_628_238_260_790_2e-15,
    -1.181_259_301_697_458_769_5e-16,
    1.186_692_254_751_600_332_6e-18,
];

const MAXIT: usize = 100_000;

fn check_i<T: Real>(function: &'static str, nu: T, x: T) -> Result<()> {
    if !(nu >= -T::half()) || !nu.is_finite() {
        return Err(Error::domain(function, "nu >= -1/2", nu.f64()));
    }
    if !(x >= T::zero()) || !x.is_finite() {
        return Err(Error::domain(function, "x >= 0", x.f64()));
    }
    Ok(())
}

// Power series for I_ν, summed outward from its largest term.
// Returns (ln of the leading term, sum of normalised terms, term count);
// `reduced` drops the (x/2)^ν factor.
fn i_series<T: Real>(nu: T, x: T, reduced: bool) -> (T, T, usize) {
    if x == T::zero() {
        return (-ln_gamma_value(nu + T::one()), T::one(), 1);
    }
    let half_x = x * T::half();
    let q = half_x * half_x;
    // largest term: (k+1)(k+ν+1) ≈ q
    let disc = (nu * nu + x * x).sqrt();
    let kstar = ((disc - nu - T::two()) * T::half()).max(T::zero()).floor();
    let k0 = kstar.to_usize().unwrap_or(0);
    let kf = T::of(k0);
    let mut lead = T::two() * kf * half_x.ln()
        - ln_gamma_value(kf + T::one())
        - ln_gamma_value(kf + nu + T::one());
    if !reduced {
        lead = lead + nu * half_x.ln();
    }
    let eps = T::epsilon() * T::lit(0.25);
    let mut sum = T::one();
    let mut n = 1;
    let mut t = T::one();
    let mut k = k0;
    loop {
        let kk = T::of(k + 1);
        t = t * q / (kk * (kk + nu));
        sum = sum + t;
        n += 1;
        k += 1;
        if t < eps * sum || n > MAXIT {
            break;
        }
    }
    let mut t = T::one();
    let mut k = k0;
    while k > 0 {
        let kk = T::of(k);
        t = t * kk * (kk + nu) / q;
        sum = sum + t;
        n += 1;
        k -= 1;
        if t < eps * sum {
            break;
        }
    }
    (lead, sum, n)
}

// Large-x expansion of √(2πx) e^{−x} I_ν(x).
fn i_asymptotic<T: Real>(nu: T, x: T) -> Option<T> {
    let mu = T::lit(4.0) * nu * nu;
    let mut term = T::one();
    let mut sum = T::one();
    let eight_x = T::lit(8.0) * x;
    for k in 1..200 {
        let odd = T::of(2 * k - 1);
        let next = -term * (mu - odd * odd) / (T::of(k) * eight_x);
        if next.abs() > term.abs() {
            return None;
        }
        term = next;
        sum = sum + term;
        if term.abs() < T::epsilon() * T::lit(0.25) * sum.abs() {
            return Some(sum);
        }
    }
    None
}

fn use_asymptotic<T: Real>(nu: T, x: T) -> bool {
    x > T::lit(50.0) + nu * nu
}

/// e^{−x} I_ν(x).
pub fn bessel_i_scaled<T: Real>(nu: T, x: T) -> Result<EvalResult<T>> {
    check_i("bessel_i_scaled", nu, x)?;
    if use_asymptotic(nu, x) {
        if let Some(s) = i_asymptotic(nu, x) {
            let v = s / (T::two() * T::PI() * x).sqrt();
            return Ok(EvalResult::with_rel(v, 8.0));
        }
    }
    let (lead, sum, n) = i_series(nu, x, false);
    let v = (lead - x).exp() * sum;
    let k = 8.0 + (lead.abs() + x).f64() + n as f64 * 0.1;
    Ok(EvalResult::with_rel(v, k))
}

/// I_ν(x); overflows to +∞ beyond x ≈ 709.
pub fn bessel_i<T: Real>(nu: T, x: T) -> Result<EvalResult<T>> {
    let s = bessel_i_scaled(nu, x)?;
    let e = x.exp();
    Ok(EvalResult::new(s.value * e, s.abs_err * e))
}

/// e^{−x} (x/2)^{−ν} I_ν(x), an entire function of x.
pub fn bessel_i_reduced_scaled<T: Real>(nu: T, x: T) -> Result<EvalResult<T>> {
    check_i("bessel_i_reduced_scaled", nu, x)?;
    if use_asymptotic(nu, x) {
        if let Some(s) = i_asymptotic(nu, x) {
            let v = s / (T::two() * T::PI() * x).sqrt() * (-nu * (x * T::half()).ln()).exp();
            return Ok(EvalResult::with_rel(v, 8.0 + nu.abs().f64() * 2.0));
        }
    }
    let (lead, sum, n) = i_series(nu, x, true);
    let v = (lead - x).exp() * sum;
    let k = 8.0 + (lead.abs() + x).f64() + n as f64 * 0.1;
    Ok(EvalResult::with_rel(v, k))
}

// (e^x K_μ(x), e^x K_{μ+1}(x)) for |μ| ≤ 1/2: Temme's series below x = 2,
// Steed's continued fraction above.
fn k_pair_scaled<T: Real>(mu: T, x: T) -> (T, T) {
    let eps = T::epsilon();
    if x < T::two() {
        let x2 = T::half() * x;
        let pimu = T::PI() * mu;
        let fact = if pimu.abs() < eps {
            T::one()
        } else {
            pimu / pimu.sin()
        };
        let d = -x2.ln();
        let e = mu * d;
        let fact2 = if e.abs() < eps {
            T::one()
        } else {
            e.sinh() / e
        };
        // gam1 = (1/Γ(1−μ) − 1/Γ(1+μ))/(2μ), gam2 = (1/Γ(1−μ) + 1/Γ(1+μ))/2
        let mut gam1 = T::zero();
        let mut gam2 = T::zero();
        let mut gampl = T::zero();
        let mut gammi = T::zero();
        let mut pw_prev = T::one();
        let mut pw = T::one();
        for (k, &c) in RGAMMA1.iter().enumerate() {
            let c = T::lit(c);
            let term = c * pw;
            gampl = gampl + term;
            if k % 2 == 0 {
                gam2 = gam2 + term;
                gammi = gammi + term;
            } else {
                gammi = gammi - term;
                gam1 = gam1 - c * pw_prev;
            }
            pw_prev = pw;
            pw = pw * mu;
        }
        let mut ff = fact * (gam1 * e.cosh() + gam2 * fact2 * d);
        let mut sum = ff;
        let ee = e.exp();
        let mut p = T::half() * ee / gampl;
        let mut q = T::half() / (ee * gammi);
        let mut c = T::one();
        let dd = x2 * x2;
        let mut sum1 = p;
        let mu2 = mu * mu;
        for i in 1..MAXIT {
            let fi = T::of(i);
            ff = (fi * ff + p + q) / (fi * fi - mu2);
            c = c * dd / fi;
            p = p / (fi - mu);
            q = q / (fi + mu);
            let del = c * ff;
            sum = sum + del;
            let del1 = c * (p - fi * ff);
            sum1 = sum1 + del1;
            if del.abs() < sum.abs() * eps {
                break;
            }
        }
        let ex = x.exp();
        (sum * ex, sum1 * T::two() / x * ex)
    } else {
        let mu2 = mu * mu;
        let mut b = T::two() * (T::one() + x);
        let mut d = T::one() / b;
        let mut delh = d;
        let mut h = d;
        let mut q1 = T::zero();
        let mut q2 = T::one();
        let a1 = T::lit(0.25) - mu2;
        let mut q = a1;
        let mut c = a1;
        let mut a = -a1;
        let mut s = T::one() + q * delh;
        for i in 2..MAXIT {
            let fi = T::of(i);
            a = a - T::two() * (fi - T::one());
            c = -a * c / fi;
            let qnew = (q1 - b * q2) / a;
            q1 = q2;
            q2 = qnew;
            q = q + c * qnew;
            b = b + T::two();
            d = T::one() / (b + a * d);
            delh = (b * d - T::one()) * delh;
            h = h + delh;
            let dels = q * delh;
            s = s + dels;
            if (dels / s).abs() < eps {
                break;
            }
        }
        h = a1 * h;
        let kmu = (T::PI() / (T::two() * x)).sqrt() / s;
        let k1 = kmu * (mu + x + T::half() - h) / x;
        (kmu, k1)
    }
}

// ln(e^x K_ν(x)) with upward recurrence guarded against overflow.
fn k_scaled_ln<T: Real>(nu: T, x: T) -> (T, usize) {
    let nu = nu.abs();
    let nl = (nu + T::half()).floor();
    let mu = nu - nl;
    let nl = nl.to_usize().unwrap_or(0);
    let (mut kmu, mut k1) = k_pair_scaled(mu, x);
    let mut log_scale = T::zero();
    let big = T::lit(1e30);
    for i in 1..=nl {
        let t = (mu + T::of(i)) * T::two() / x * k1 + kmu;
        kmu = k1;
        k1 = t;
        if k1 > big {
            kmu = kmu / big;
            k1 = k1 / big;
            log_scale = log_scale + big.ln();
        }
    }
    (kmu.ln() + log_scale, nl)
}

fn check_k<T: Real>(function: &'static str, nu: T, x: T) -> Result<()> {
    if !(x > T::zero()) || !x.is_finite() {
        return Err(Error::domain(function, "x > 0", x.f64()));
    }
    if !nu.is_finite() {
        return Err(Error::domain(function, "finite nu", nu.f64()));
    }
    Ok(())
}

/// e^{x} K_ν(x).
pub fn bessel_k_scaled<T: Real>(nu: T, x: T) -> Result<EvalResult<T>> {
    check_k("bessel_k_scaled", nu, x)?;
    let (l, nl) = k_scaled_ln(nu, x);
    Ok(EvalResult::with_rel(l.exp(), 16.0 + 2.0 * nl as f64))
}

/// K_ν(x), any real order.
pub fn bessel_k<T: Real>(nu: T, x: T) -> Result<EvalResult<T>> {
    check_k("bessel_k", nu, x)?;
    let (l, nl) = k_scaled_ln(nu, x);
    Ok(EvalResult::with_rel(
        (l - x).exp(),
        16.0 + 2.0 * nl as f64 + l.abs().f64(),
    ))
}

/// ln K_ν(x), usable where K under- or overflows.
pub fn bessel_k_ln<T: Real>(nu: T, x: T) -> Result<EvalResult<T>> {
    check_k("bessel_k_ln", nu, x)?;
    let (l, nl) = k_scaled_ln(nu, x);
    Ok(EvalResult::new(
        l - x,
        T::epsilon() * (T::lit(16.0 + 2.0 * nl as f64) + x),
    ))
}

/// J_ν(z) z^{−ν} for ν > −1, z ≥ 0; entire in z.
///
/// Power series for small z, otherwise Miller's backward recurrence
/// normalised by (z/2)^ν = Σ_k (ν+2k) Γ(ν+k)/k! J_{ν+2k}(z).
pub fn bessel_j_reduced<T: Real>(nu: T, z: T) -> Result<T> {
    if !(nu > -T::one()) {
        return Err(Error::domain("bessel_j_reduced", "nu > -1", nu.f64()));
    }
    if !(z >= T::zero()) || !z.is_finite() {
        return Err(Error::domain("bessel_j_reduced", "z >= 0", z.f64()));
    }
    let base = (-nu * T::two().ln() - ln_gamma_value(nu + T::one())).exp();
    if z < T::lit(2.0) {
        let q = -(z * z) * T::lit(0.25);
        let mut t = T::one();
        let mut s = T::one();
        for k in 1..200 {
            let kk = T::of(k);
            t = t * q / (kk * (kk + nu));
            s = s + t;
            if t.abs() < T::epsilon() * T::lit(0.1) * s.abs() {
                break;
            }
        }
        return Ok(base * s);
    }
    let half = ((z + T::lit(30.0) + (T::lit(40.0) * z).sqrt()) * T::half())
        .ceil()
        .to_usize()
        .unwrap_or(64);
    let m = 2 * half;
    // h_k = Γ(ν+k)/(k! Γ(ν+1)), k ≥ 1
    let mut h = vec![T::one(); half + 1];
    for k in 1..half {
        h[k + 1] = h[k] * (nu + T::of(k)) / T::of(k + 1);
    }
    let mut jp1 = T::zero();
    let mut j = T::lit(1e-30);
    let mut norm = T::zero();
    let big = T::lit(1e30);
    let mut k = m;
    loop {
        if k % 2 == 0 {
            let kk = k / 2;
            norm = norm
                + if kk == 0 {
                    j
                } else {
                    (nu + T::of(k)) * h[kk] * j
                };
        }
        if k == 0 {
            break;
        }
        let order = nu + T::of(k);
        let jm1 = T::two() * order / z * j - jp1;
        jp1 = j;
        j = jm1;
        k -= 1;
        if j.abs() > big {
            j = j / big;
            jp1 = jp1 / big;
            norm = norm / big;
        }
    }
    Ok(base * j / norm)
}
