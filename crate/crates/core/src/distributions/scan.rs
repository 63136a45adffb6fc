//! Sign scan shared by the δ < 0 validity checks.

use super::gamma_bessel::ValidityReport;

/// Tolerance below zero before a kernel value counts as negative.
pub(crate) const NEGATIVE_TOL: f64 = -1e-12;

/// Evaluates `f` on a geometric grid over `[lo, hi]` with the given ratio and
/// reports the first point where it drops below [`NEGATIVE_TOL`].
pub(crate) fn geometric_scan<F>(f: F, lo: f64, hi: f64, ratio: f64) -> ValidityReport
where
    F: Fn(f64) -> f64,
{
    let mut t = lo;
    let mut points = 0;
    let mut min_value = f64::INFINITY;
    let mut first_negative = None;
    let mut saw_nan = false;
    while t <= hi {
        let v = f(t);
        points += 1;
        if v.is_nan() {
            saw_nan = true;
        } else {
            if v < min_value {
                min_value = v;
            }
            if v < NEGATIVE_TOL && first_negative.is_none() {
                first_negative = Some(t);
            }
        }
        t *= ratio;
    }
    ValidityReport {
        valid: first_negative.is_none() && !saw_nan,
        first_negative,
        min_value,
        scan_lower: lo,
        scan_upper: hi,
        points,
    }
}
