use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A univariate polynomial with integer coefficients, indexed by exponent.
///
/// Kept in canonical form: no trailing zero coefficients, so the zero
/// polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn zero() -> IntPoly {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> IntPoly {
        IntPoly { coeffs: vec![1] }
    }

    pub fn constant(c: i64) -> IntPoly {
        IntPoly::from_coeffs(vec![c])
    }

    /// `λ^k`.
    pub fn monomial(k: usize) -> IntPoly {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        IntPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> IntPoly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * i as i64)
                .collect(),
        )
    }

    /// Substitutes `x + c` for the variable.
    pub fn compose_x_plus(&self, c: i64) -> IntPoly {
        let mut acc = IntPoly::zero();
        // Horner: p(x+c) = (((a_n)(x+c) + a_{n-1})(x+c) + ...).
        for &a in self.coeffs.iter().rev() {
            acc = &(&acc * &IntPoly::from_coeffs(vec![c, 1])) + &IntPoly::constant(a);
        }
        acc
    }

    /// Exact synthetic division by `(λ - root)`, returning the quotient and
    /// the remainder `p(root)`.
    pub fn divide_by_linear(&self, root: i64) -> (IntPoly, i64) {
        if self.is_zero() {
            return (IntPoly::zero(), 0);
        }
        let n = self.coeffs.len();
        let mut quotient = vec![0i64; n - 1];
        let mut carry = 0i64;
        for k in (0..n).rev() {
            let value = self.coeffs[k] + carry * root;
            if k == 0 {
                return (IntPoly::from_coeffs(quotient), value);
            }
            quotient[k - 1] = value;
            carry = value;
        }
        unreachable!()
    }

    pub fn scale(&self, c: i64) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|&a| a * c).collect())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        self.scale(-1)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.unsigned_abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert!(IntPoly::from_coeffs(vec![0, 0, 0]).is_zero());
        assert_eq!(IntPoly::from_coeffs(vec![1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn division_by_linear() {
        // x^3 - 4x^2 + 6x - 3 = (x - 1)(x^2 - 3x + 3)
        let chi = IntPoly::from_coeffs(vec![-3, 6, -4, 1]);
        let (q, r) = chi.divide_by_linear(1);
        assert_eq!(r, 0);
        assert_eq!(q, IntPoly::from_coeffs(vec![3, -3, 1]));
    }

    #[test]
    fn shift_composition() {
        // (x^2 - 3x + 3) at x+1 is x^2 - x + 1.
        let p = IntPoly::from_coeffs(vec![3, -3, 1]);
        assert_eq!(p.compose_x_plus(1), IntPoly::from_coeffs(vec![1, -1, 1]));
    }

    #[test]
    fn display() {
        let p = IntPoly::from_coeffs(vec![-3, 6, -4, 1]);
        assert_eq!(p.to_string(), "x^3 - 4x^2 + 6x - 3");
    }
}
