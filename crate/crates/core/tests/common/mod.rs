#![allow(dead_code)]

pub fn rel(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        ((a - b) / b).abs()
    }
}

#[track_caller]
pub fn assert_rel(got: f64, want: f64, tol: f64) {
    let e = rel(got, want);
    assert!(
        e <= tol,
        "got {got:.17e}, want {want:.17e}, rel err {e:.3e} > {tol:.1e}"
    );
}

#[track_caller]
pub fn assert_abs(got: f64, want: f64, tol: f64) {
    let e = (got - want).abs();
    assert!(
        e <= tol,
        "got {got:.17e}, want {want:.17e}, abs err {e:.3e} > {tol:.1e}"
    );
}
