use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::FieldError;

/// Display labels of the basis, in coordinate order.
pub const BASIS_LABELS: [&str; 8] = ["1", "√2", "√3", "√6", "i", "i√2", "i√3", "i√6"];

/// Identifier of the coordinate basis written into serialized documents.
pub const FIELD_BASIS: &str = "Q(i,sqrt2,sqrt3):1,sqrt2,sqrt3,sqrt6,i,i*sqrt2,i*sqrt3,i*sqrt6";

// Shorthand spelling of each basis element, parseable by `Scalar::from_str`.
const ASCII_LABELS: [&str; 8] = ["", "sqrt2", "sqrt3", "sqrt6", "i", "i*sqrt2", "i*sqrt3", "i*sqrt6"];

/// An element of K. Two scalars are equal iff their coordinates are equal.
///
/// The derived ordering is lexicographic on coordinates; it is a total order
/// used only for canonical sorting, not a field ordering.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    c: [BigRational; 8],
}

/// Product of basis elements `x` and `y`: returns (sign * factor, index).
///
/// Bit 0 of an index is √2, bit 1 is √3, bit 2 is i.
#[inline]
pub(crate) fn basis_product(x: usize, y: usize) -> (i64, usize) {
    let both = x & y;
    let mut f = 1;
    if both & 1 != 0 {
        f *= 2;
    }
    if both & 2 != 0 {
        f *= 3;
    }
    if both & 4 != 0 {
        f = -f;
    }
    (f, x ^ y)
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { c: std::array::from_fn(|_| BigRational::zero()) }
    }

    pub fn one() -> Self {
        Self::from_i64(1)
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    /// `num/den` as a scalar. Panics if `den == 0`.
    pub fn from_frac(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut s = Self::zero();
        s.c[0] = q;
        s
    }

    pub fn from_coords(c: [BigRational; 8]) -> Self {
        // Ratio arithmetic keeps values reduced; constructing through `new`
        // elsewhere guarantees canonical form, so nothing to normalize here.
        Scalar { c }
    }

    /// The basis element with index `idx` (0..8).
    pub fn basis(idx: usize) -> Self {
        let mut s = Self::zero();
        s.c[idx] = BigRational::one();
        s
    }

    pub fn i() -> Self {
        Self::basis(4)
    }

    pub fn sqrt2() -> Self {
        Self::basis(1)
    }

    pub fn sqrt3() -> Self {
        Self::basis(2)
    }

    pub fn sqrt6() -> Self {
        Self::basis(3)
    }

    /// ζ = e^{iπ/3} = 1/2 + (√3/2)i.
    pub fn zeta() -> Self {
        let mut s = Self::zero();
        s.c[0] = BigRational::new(1.into(), 2.into());
        s.c[6] = BigRational::new(1.into(), 2.into());
        s
    }

    pub fn coords(&self) -> &[BigRational; 8] {
        &self.c
    }

    pub fn coord(&self, idx: usize) -> &BigRational {
        &self.c[idx]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.c[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then(|| &self.c[0])
    }

    /// Complex conjugation: negates the four i-carrying coordinates.
    pub fn conj(&self) -> Self {
        let mut out = self.clone();
        for q in &mut out.c[4..] {
            *q = -q.clone();
        }
        out
    }

    pub(crate) fn mul_ref(&self, other: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (x, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (y, b) in other.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let (f, idx) = basis_product(x, y);
                let p = a * b;
                if f == 1 {
                    out.c[idx] += p;
                } else {
                    out.c[idx] += p * BigRational::from_integer(f.into());
                }
            }
        }
        out
    }

    pub fn scale(&self, q: &BigRational) -> Scalar {
        if q.is_zero() {
            return Scalar::zero();
        }
        Scalar { c: std::array::from_fn(|j| &self.c[j] * q) }
    }

    pub(crate) fn coords_mut(&mut self) -> &mut [BigRational; 8] {
        &mut self.c
    }

    /// Multiplicative inverse, found by solving the 8×8 rational system
    /// (multiplication by `self`) · x = 1.
    pub fn inverse(&self) -> Result<Scalar, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroDivision);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Scalar::from_rational(q.recip()));
        }
        // Column y of m is self · e_y; augmented with the target e_0.
        let mut m: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); 9]; 8];
        for y in 0..8 {
            for x in 0..8 {
                if self.c[x].is_zero() {
                    continue;
                }
                let (f, idx) = basis_product(x, y);
                m[idx][y] += &self.c[x] * BigRational::from_integer(f.into());
            }
        }
        m[0][8] = BigRational::one();
        for col in 0..8 {
            let piv = (col..8).find(|&r| !m[r][col].is_zero()).ok_or(FieldError::ZeroDivision)?;
            m.swap(col, piv);
            let inv = m[col][col].recip();
            for v in m[col].iter_mut().skip(col) {
                *v *= &inv;
            }
            let pivot_row = m[col].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r == col || row[col].is_zero() {
                    continue;
                }
                let f = row[col].clone();
                for j in col..9 {
                    row[j] -= &f * &pivot_row[j];
                }
            }
        }
        Ok(Scalar { c: std::array::from_fn(|r| m[r][8].clone()) })
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            base = base.mul_ref(&base);
            e >>= 1;
        }
        acc
    }

    /// Square root of a rational whose squarefree part of |a| is 1, 2, 3 or 6.
    ///
    /// A negative input contributes a factor of i. The returned root has its
    /// single nonzero coordinate positive.
    pub fn sqrt_restricted(&self) -> Result<Scalar, FieldError> {
        let q = self
            .as_rational()
            .ok_or_else(|| FieldError::NotRepresentable(format!("{self} is not rational")))?;
        if q.is_zero() {
            return Ok(Scalar::zero());
        }
        let negative = q.is_negative();
        let q = q.abs();
        // sqrt(p/d) = sqrt(p·d)/d
        let den = q.denom().clone();
        let mut m: BigInt = q.numer() * &den;
        let mut root = BigInt::one();
        let mut surd = 0usize;
        for (p, bit) in [(2u32, 1usize), (3, 2)] {
            let p = BigInt::from(p);
            let mut e = 0u32;
            while m.is_multiple_of(&p) {
                m /= &p;
                e += 1;
            }
            root *= p.pow(e / 2);
            if e % 2 == 1 {
                surd |= bit;
            }
        }
        let r = m.sqrt();
        if &r * &r != m {
            return Err(FieldError::NotRepresentable(format!(
                "squarefree part of {} is outside {{1, 2, 3, 6}}",
                self
            )));
        }
        root *= r;
        let idx = surd | if negative { 4 } else { 0 };
        let mut out = Scalar::zero();
        out.c[idx] = BigRational::new(root, den);
        Ok(out)
    }

    /// Floating-point embedding (real, imaginary), for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let surds = [1.0, 2f64.sqrt(), 3f64.sqrt(), 6f64.sqrt()];
        let f = |q: &BigRational| -> f64 {
            let n: f64 = q.numer().to_string().parse().unwrap_or(f64::NAN);
            let d: f64 = q.denom().to_string().parse().unwrap_or(f64::NAN);
            n / d
        };
        let re = (0..4).map(|j| f(&self.c[j]) * surds[j]).sum();
        let im = (0..4).map(|j| f(&self.c[j + 4]) * surds[j]).sum();
        (re, im)
    }

    /// Coordinates as "p/q" strings (integers without a denominator are "p").
    pub fn coord_strings(&self) -> [String; 8] {
        std::array::from_fn(|j| rational_string(&self.c[j]))
    }
}

pub(crate) fn rational_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl fmt::Display for Scalar {
    /// Writes a sum of terms in the shorthand accepted by `Scalar::from_str`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, q) in self.c.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let neg = q.is_negative();
            let mag = q.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            if j == 0 {
                write!(f, "{}", rational_string(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", ASCII_LABELS[j])?;
            } else {
                write!(f, "{}*{}", rational_string(&mag), ASCII_LABELS[j])?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}
