//! Binomial probability mass and compensated accumulation.
//!
//! The pmf is evaluated in double-double arithmetic (~31 significant
//! digits carried internally) so the returned `f64` is correct to a few
//! ulps even for large populations, where a plain multiplicative chain
//! or a log-gamma route loses 1-2 digits. Populations above
//! [`DD_POPULATION_LIMIT`] fall back to a log-space evaluation to avoid
//! overflowing the double-double splitter.

/// Largest population handled by the double-double chain.
pub const DD_POPULATION_LIMIT: u64 = 512;

/// Veltkamp splitter constant for f64 (2^27 + 1).
const SPLIT: f64 = 134_217_729.0;

#[inline]
fn split(a: f64) -> (f64, f64) {
    let t = SPLIT * a;
    let hi = t - (t - a);
    (hi, a - hi)
}

/// Error-free product: returns `(p, e)` with `p + e == a * b` exactly.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    let e = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
    (p, e)
}

/// Error-free sum for `|a| >= |b|`.
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

/// Unevaluated sum of two doubles, `hi` carrying the leading digits.
#[derive(Debug, Clone, Copy)]
struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p, e + self.lo * b);
        Dd { hi, lo }
    }

    #[inline]
    fn div_f64(self, b: f64) -> Self {
        let q0 = self.hi / b;
        let (p, e) = two_prod(q0, b);
        let r = ((self.hi - p) - e) + self.lo;
        let (hi, lo) = quick_two_sum(q0, r / b);
        Dd { hi, lo }
    }

    #[inline]
    fn mul(self, b: Dd) -> Self {
        let (p, e) = two_prod(self.hi, b.hi);
        let (hi, lo) = quick_two_sum(p, e + (self.hi * b.lo + self.lo * b.hi));
        Dd { hi, lo }
    }

    #[inline]
    fn value(self) -> f64 {
        self.hi + self.lo
    }
}

/// `base^exp` by binary exponentiation in double-double precision.
fn dd_powi(base: f64, mut exp: u64) -> Dd {
    let mut result = Dd::ONE;
    let mut square = Dd::from_f64(base);
    while exp > 0 {
        if exp & 1 == 1 {
            result = result.mul(square);
        }
        exp >>= 1;
        if exp > 0 {
            square = square.mul(square);
        }
    }
    result
}

/// Probability that exactly `failed` of `available` independent components
/// fail when each survives with probability `p`:
/// `C(available, failed) * p^(available-failed) * (1-p)^failed`.
///
/// Panics when `failed > available` or `p` is outside `[0, 1]`.
pub fn binom_pmf(available: u64, failed: u64, p: f64) -> f64 {
    assert!(
        failed <= available,
        "failed count {failed} exceeds available components {available}"
    );
    assert!((0.0..=1.0).contains(&p), "probability {p} outside [0, 1]");
    let q = 1.0 - p;
    if p == 0.0 {
        return if failed == available { 1.0 } else { 0.0 };
    }
    if q == 0.0 {
        return if failed == 0 { 1.0 } else { 0.0 };
    }
    if available > DD_POPULATION_LIMIT {
        return binom_pmf_log(available, failed, p, q);
    }
    // C(available, failed) * q^failed, interleaved to keep the running
    // magnitude near the binomial coefficient at worst.
    let mut acc = Dd::ONE;
    for i in 1..=failed {
        acc = acc
            .mul_f64((available - failed + i) as f64)
            .div_f64(i as f64)
            .mul_f64(q);
    }
    acc.mul(dd_powi(p, available - failed)).value()
}

/// Log-space fallback for very large populations; accurate to ~1e-12
/// relative, which is ample at those scales.
fn binom_pmf_log(available: u64, failed: u64, p: f64, q: f64) -> f64 {
    let mut log_c = 0.0f64;
    for i in 1..=failed.min(available - failed) {
        let num = (available - failed.min(available - failed) + i) as f64;
        log_c += num.ln() - (i as f64).ln();
    }
    let log_pmf = log_c + (available - failed) as f64 * p.ln() + failed as f64 * q.ln();
    log_pmf.exp()
}

/// Neumaier-compensated accumulator for long sums of nonnegative terms.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::bigint::BigInt;
    use num::rational::BigRational;
    use num::{One, Signed, ToPrimitive, Zero};

    /// Round a rational of arbitrary magnitude to the nearest f64. The
    /// numerator is rescaled to ~160 bits before the integer division so
    /// neither side overflows on its own.
    fn rational_to_f64(r: &BigRational) -> f64 {
        if r.is_zero() {
            return 0.0;
        }
        let n = r.numer().abs();
        let d = r.denom().abs();
        let mut shift: i64 = 160 - (n.bits() as i64 - d.bits() as i64);
        let scaled = if shift >= 0 { (n << shift as u64) / d } else { n / (d << (-shift) as u64) };
        let mut value = scaled.to_f64().unwrap();
        while shift > 900 {
            value *= 2f64.powi(-900);
            shift -= 900;
        }
        while shift < -900 {
            value *= 2f64.powi(900);
            shift += 900;
        }
        value *= 2f64.powi(-shift as i32);
        if r.is_negative() {
            -value
        } else {
            value
        }
    }

    /// Exact pmf over rationals, interpreting `p` as the exact rational
    /// value of its f64 representation.
    fn exact_pmf(available: u64, failed: u64, p: f64) -> f64 {
        let p = BigRational::from_float(p).unwrap();
        let q = BigRational::one() - &p;
        let mut c = BigInt::one();
        for i in 1..=failed {
            c = c * BigInt::from(available - failed + i) / BigInt::from(i);
        }
        let mut value = BigRational::from_integer(c);
        for _ in 0..(available - failed) {
            value *= &p;
        }
        for _ in 0..failed {
            value *= &q;
        }
        rational_to_f64(&value)
    }

    #[test]
    fn pmf_small_examples() {
        assert!((binom_pmf(2, 1, 0.9) - 0.18).abs() < 1e-16);
        assert_eq!(binom_pmf(5, 0, 1.0), 1.0);
        assert_eq!(binom_pmf(0, 0, 0.3), 1.0);
        assert_eq!(binom_pmf(5, 3, 1.0), 0.0);
        assert_eq!(binom_pmf(5, 3, 0.0), 0.0);
        assert_eq!(binom_pmf(5, 5, 0.0), 1.0);
    }

    #[test]
    fn pmf_large_population_matches_exact_rational() {
        let value = binom_pmf(101, 50, 0.99);
        let exact = exact_pmf(101, 50, 0.99);
        assert!(
            ((value - exact) / exact).abs() < 1e-15,
            "value {value:e} vs exact {exact:e}"
        );
    }

    #[test]
    fn pmf_matches_exact_rational_on_grid() {
        for &available in &[1u64, 2, 7, 19, 60, 101, 120] {
            for &p in &[0.01, 0.5, 0.99, 0.99999] {
                for failed in 0..=available.min(12) {
                    let value = binom_pmf(available, failed, p);
                    let exact = exact_pmf(available, failed, p);
                    let err = if exact == 0.0 {
                        value.abs()
                    } else {
                        ((value - exact) / exact).abs()
                    };
                    assert!(err < 1e-14, "Λ={available} f={failed} p={p}: {err:e}");
                }
            }
        }
    }

    #[test]
    fn pmf_rows_sum_to_one() {
        for &available in &[1u64, 3, 17, 101] {
            for &p in &[0.2, 0.99] {
                let mut acc = CompensatedSum::default();
                for failed in 0..=available {
                    acc.add(binom_pmf(available, failed, p));
                }
                assert!((acc.value() - 1.0).abs() < 1e-13);
            }
        }
    }

    #[test]
    #[should_panic(expected = "exceeds available")]
    fn pmf_rejects_excess_failures() {
        binom_pmf(2, 3, 0.5);
    }

    #[test]
    fn log_fallback_consistent_with_dd_route() {
        // Same inputs evaluated through both routes should agree closely.
        let p = 0.97;
        for failed in [0u64, 1, 40, 200, 512] {
            let dd = binom_pmf(512, failed, p);
            let log = super::binom_pmf_log(512, failed, p, 1.0 - p);
            let err = if dd == 0.0 { log.abs() } else { ((dd - log) / dd).abs() };
            assert!(err < 1e-11, "failed={failed}: {err:e}");
        }
    }

    #[test]
    fn compensated_sum_recovers_cancellation() {
        let mut acc = CompensatedSum::default();
        acc.add(1.0);
        for _ in 0..10 {
            acc.add(1e-17);
        }
        assert!((acc.value() - (1.0 + 1e-16)).abs() < 1e-18);
    }

    #[test]
    fn binom_pmf_log_zero_and_full_failures() {
        let exact = exact_pmf(120, 0, 0.99);
        let log = super::binom_pmf_log(120, 0, 0.99, 0.01);
        assert!(((log - exact) / exact).abs() < 1e-12);
    }
}
