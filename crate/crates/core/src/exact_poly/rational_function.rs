use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{PolyError, RationalPoly};

/// Quotient of two rational polynomials.
///
/// Not kept in lowest terms; equality cross-multiplies.
#[derive(Debug, Clone)]
pub struct RationalFunction {
    num: RationalPoly,
    den: RationalPoly,
}

impl RationalFunction {
    pub fn new(num: RationalPoly, den: RationalPoly) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_poly(p: RationalPoly) -> Self {
        RationalFunction {
            num: p,
            den: RationalPoly::one(),
        }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(RationalPoly::constant(c))
    }

    pub fn num(&self) -> &RationalPoly {
        &self.num
    }

    pub fn den(&self) -> &RationalPoly {
        &self.den
    }

    pub fn into_parts(self) -> (RationalPoly, RationalPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        RationalFunction {
            num: self.num.scale(factor),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &RationalPoly) -> Self {
        RationalFunction {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    pub fn div_poly(&self, p: &RationalPoly) -> Result<Self, PolyError> {
        Self::new(self.num.clone(), &self.den * p)
    }

    pub fn checked_div(&self, rhs: &RationalFunction) -> Result<Self, PolyError> {
        if rhs.num.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn pow(&self, n: u32) -> Self {
        RationalFunction {
            num: self.num.pow(n),
            den: self.den.pow(n),
        }
    }

    pub fn eval(&self, x: &BigRational) -> Result<BigRational, PolyError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        Ok(self.num.eval(x) / d)
    }

    /// Exact polynomial value, failing unless the denominator divides the numerator.
    pub fn into_polynomial(self) -> Result<RationalPoly, PolyError> {
        self.num.div_exact(&self.den)
    }

    /// `Σ_{k=0}^{order} self^k / k!`, built by Horner's rule so the
    /// denominator is `den^order` rather than a product of distinct powers.
    pub fn truncated_exp(&self, order: u32) -> Self {
        let one = RationalFunction::constant(BigRational::one());
        let mut acc = one.clone();
        for k in (1..=order).rev() {
            let step = self.scale(&BigRational::new(1.into(), k.into()));
            acc = &(&step * &acc) + &one;
        }
        acc
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction {
                num: &self.num + &rhs.num,
                den: self.den.clone(),
            };
        }
        RationalFunction {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

/// `p(sub_num / sub_den)` as an exact rational function whose denominator is
/// `sub_den^deg p`.
///
/// The numerator `Σ c_k sub_num^k sub_den^{n−k}` is accumulated with a
/// homogenized Horner recurrence.
pub fn substitute_rational(
    p: &RationalPoly,
    sub_num: &RationalPoly,
    sub_den: &RationalPoly,
) -> Result<RationalFunction, PolyError> {
    if sub_den.is_zero() {
        return Err(PolyError::ZeroDenominator);
    }
    let Some(n) = p.degree() else {
        return Ok(RationalFunction::from_poly(RationalPoly::zero()));
    };
    let mut den_power = RationalPoly::one();
    let mut acc = RationalPoly::constant(p.coeff(n));
    for k in (0..n).rev() {
        den_power = &den_power * sub_den;
        acc = &(&acc * sub_num) + &den_power.scale(&p.coeff(k));
    }
    RationalFunction::new(acc, sub_den.pow(n as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::rational;

    fn ints(c: &[i64]) -> RationalPoly {
        RationalPoly::from_integers(c.iter().copied())
    }

    #[test]
    fn substitute_identity_map() {
        let rf = substitute_rational(&RationalPoly::variable(), &RationalPoly::one(), &ints(&[1, 0, 1])).unwrap();
        assert_eq!(rf.num(), &RationalPoly::one());
        assert_eq!(rf.den(), &ints(&[1, 0, 1]));
    }

    #[test]
    fn substitute_one_minus_square() {
        // w = 1/(2(1+q²)) in 1 − w²
        let rf = substitute_rational(&ints(&[1, 0, -1]), &RationalPoly::one(), &ints(&[2, 0, 2])).unwrap();
        assert_eq!(rf.num().primitive_part(), ints(&[3, 0, 8, 0, 4]));
        let expected = RationalFunction::new(ints(&[3, 0, 8, 0, 4]), ints(&[4, 0, 8, 0, 4])).unwrap();
        assert_eq!(rf, expected);
    }

    #[test]
    fn substitute_zero_denominator_fails() {
        assert!(matches!(
            substitute_rational(&ints(&[1, 1]), &RationalPoly::one(), &RationalPoly::zero()),
            Err(PolyError::ZeroDenominator)
        ));
    }

    #[test]
    fn arithmetic_and_equality() {
        let a = RationalFunction::new(ints(&[1]), ints(&[1, 1])).unwrap();
        let b = RationalFunction::new(ints(&[1]), ints(&[1, -1])).unwrap();
        // 1/(1+x) + 1/(1−x) = 2/(1−x²)
        let sum = &a + &b;
        assert_eq!(sum, RationalFunction::new(ints(&[2]), ints(&[1, 0, -1])).unwrap());
        assert_eq!(&sum - &b, a);
        assert_eq!(a.checked_div(&a).unwrap(), RationalFunction::constant(rational(1, 1)));
        assert_eq!(a.eval(&rational(1, 3)).unwrap(), rational(3, 4));
        assert!(a.eval(&rational(-1, 1)).is_err());
    }

    #[test]
    fn truncated_exp_matches_direct_sum() {
        let p = RationalFunction::new(ints(&[0, 2]), ints(&[3, 1])).unwrap();
        let direct = {
            let mut s = RationalFunction::constant(rational(1, 1));
            let mut fact = 1i64;
            for k in 1..=4u32 {
                fact *= i64::from(k);
                s = &s + &p.pow(k).scale(&rational(1, fact));
            }
            s
        };
        assert_eq!(p.truncated_exp(4), direct);
    }
}
