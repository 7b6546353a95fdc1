use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{PolyError, RationalPoly};

/// Sign a polynomial is expected to keep on an interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    fn matches(self, value: &BigRational) -> bool {
        match self {
            Sign::Positive => value.is_positive(),
            Sign::Negative => value.is_negative(),
        }
    }
}

/// Sturm chain `p, p', −rem(p, p'), …`.
///
/// Each remainder is replaced by its primitive part, a positive multiple, so
/// coefficient growth stays under control without disturbing the signs.
pub fn sturm_sequence(p: &RationalPoly) -> Vec<RationalPoly> {
    let mut seq = vec![p.primitive_part()];
    let d = p.derivative();
    if d.is_zero() {
        return seq;
    }
    seq.push(d.primitive_part());
    loop {
        let n = seq.len();
        let (_, r) = seq[n - 2]
            .div_rem(&seq[n - 1])
            .expect("chain members are nonzero");
        if r.is_zero() {
            break;
        }
        seq.push((-&r).primitive_part());
    }
    seq
}

fn sign_changes(seq: &[RationalPoly], x: &BigRational) -> usize {
    let signs: Vec<Ordering> = seq
        .iter()
        .map(|p| p.eval(x).cmp(&BigRational::zero()))
        .filter(|s| *s != Ordering::Equal)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

fn check_interval(p: &RationalPoly, lo: &BigRational, hi: &BigRational) -> Result<(), PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(PolyError::InvalidInterval {
            lo: Box::new(lo.clone()),
            hi: Box::new(hi.clone()),
        });
    }
    for x in [lo, hi] {
        if p.eval(x).is_zero() {
            return Err(PolyError::EndpointRoot {
                point: Box::new(x.clone()),
            });
        }
    }
    Ok(())
}

/// Number of distinct real roots of `p` in the open interval `(lo, hi)`.
///
/// ```
/// use gamma_extremes::exact_poly::{rational, sturm_roots_in_interval, RationalPoly};
///
/// let p = RationalPoly::from_integers([-2i64, 0, 1]); // w² − 2
/// assert_eq!(sturm_roots_in_interval(&p, &rational(1, 1), &rational(2, 1)).unwrap(), 1);
/// ```
pub fn sturm_roots_in_interval(p: &RationalPoly, lo: &BigRational, hi: &BigRational) -> Result<usize, PolyError> {
    check_interval(p, lo, hi)?;
    let seq = sturm_sequence(p);
    Ok(sign_changes(&seq, lo) - sign_changes(&seq, hi))
}

/// True iff `p` has no root in `(lo, hi)` and carries the `expected` sign
/// at `lo`, at `hi` and at the midpoint.
pub fn verify_sign_on_interval(
    p: &RationalPoly,
    lo: &BigRational,
    hi: &BigRational,
    expected: Sign,
) -> Result<bool, PolyError> {
    let roots = sturm_roots_in_interval(p, lo, hi)?;
    let mid = (lo + hi) / BigRational::from_integer(2.into());
    Ok(roots == 0 && [lo, hi, &mid].into_iter().all(|x| expected.matches(&p.eval(x))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::rational;

    fn ints(c: &[i64]) -> RationalPoly {
        RationalPoly::from_integers(c.iter().copied())
    }

    #[test]
    fn simple_counts() {
        assert_eq!(sturm_roots_in_interval(&ints(&[-2, 0, 1]), &rational(1, 1), &rational(2, 1)).unwrap(), 1);
        assert_eq!(sturm_roots_in_interval(&ints(&[1, 0, 1]), &rational(-10, 1), &rational(10, 1)).unwrap(), 0);
        assert_eq!(sturm_roots_in_interval(&ints(&[-2, 0, 1]), &rational(-2, 1), &rational(2, 1)).unwrap(), 2);
    }

    #[test]
    fn repeated_roots_count_once() {
        // (x − 1)² (x + 2)
        let p = &ints(&[-1, 1]).pow(2) * &ints(&[2, 1]);
        assert_eq!(sturm_roots_in_interval(&p, &rational(-3, 1), &rational(3, 1)).unwrap(), 2);
    }

    #[test]
    fn endpoint_root_is_an_error() {
        let err = sturm_roots_in_interval(&ints(&[-1, 1]), &rational(0, 1), &rational(1, 1)).unwrap_err();
        assert!(matches!(err, PolyError::EndpointRoot { .. }));
        assert!(matches!(
            sturm_roots_in_interval(&ints(&[1, 1]), &rational(1, 1), &rational(0, 1)),
            Err(PolyError::InvalidInterval { .. })
        ));
    }

    #[test]
    fn sign_verdicts() {
        let j = ints(&[-1, 1, 9, 38, -31, 9, -1]);
        assert!(verify_sign_on_interval(&j, &rational(1, 4), &rational(1, 3), Sign::Positive).unwrap());
        assert!(!verify_sign_on_interval(&ints(&[-1, 1]), &rational(0, 1), &rational(1, 2), Sign::Positive).unwrap());
        let i = ints(&[3, 40, -153, 160, 145, 40, 5]);
        assert!(verify_sign_on_interval(&i, &rational(0, 1), &rational(1, 1), Sign::Positive).unwrap());
        // constant term −1: the positivity of J is local to the interval
        assert!(!verify_sign_on_interval(&j, &rational(1, 100), &rational(1, 3), Sign::Positive).unwrap());
    }
}
