use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_rational::BigRational;

use crate::Scalar;

fn add_ref(a: &Scalar, b: &Scalar) -> Scalar {
    let mut out = a.clone();
    out += b;
    out
}

fn sub_ref(a: &Scalar, b: &Scalar) -> Scalar {
    let mut out = a.clone();
    out -= b;
    out
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for (x, y) in self.coords_mut().iter_mut().zip(rhs.coords()) {
            *x += y;
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        for (x, y) in self.coords_mut().iter_mut().zip(rhs.coords()) {
            *x -= y;
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = self.mul_ref(rhs);
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self += &rhs;
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self -= &rhs;
    }
}

impl MulAssign for Scalar {
    fn mul_assign(&mut self, rhs: Scalar) {
        *self = self.mul_ref(&rhs);
    }
}

// Division panics on a zero divisor, like integer division.
fn div_ref(a: &Scalar, b: &Scalar) -> Scalar {
    a.mul_ref(&b.inverse().expect("division by zero scalar"))
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:path) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                $f(self, rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                $f(self, &rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                $f(&self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                $f(&self, &rhs)
            }
        }
    };
}

binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, Scalar::mul_ref);
binop!(Div, div, div_ref);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let mut out = self.clone();
        for q in out.coords_mut().iter_mut() {
            *q = -q.clone();
        }
        out
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_i64(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::from_rational(q)
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |acc, x| acc * x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_on_refs_and_values() {
        let a = Scalar::from_i64(3);
        let b = Scalar::sqrt2();
        let s = &a + &b;
        assert_eq!(&s - &b, a);
        assert_eq!(&b * &b, Scalar::from_i64(2));
        assert_eq!(Scalar::one() / Scalar::from_i64(4), Scalar::from_frac(1, 4));
        assert_eq!(-(-b.clone()), b);
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(Scalar::i() * Scalar::i(), Scalar::from_i64(-1));
    }

    #[test]
    fn sum_and_product() {
        let v = [Scalar::from_i64(1), Scalar::from_i64(2), Scalar::from_i64(3)];
        assert_eq!(v.iter().sum::<Scalar>(), Scalar::from_i64(6));
        assert_eq!(v.into_iter().product::<Scalar>(), Scalar::from_i64(6));
    }

    #[test]
    #[should_panic(expected = "division by zero")]
    fn divide_by_zero_panics() {
        let _ = Scalar::one() / Scalar::zero();
    }
}
