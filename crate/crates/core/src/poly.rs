//! Bivariate polynomials of bounded total degree.
//!
//! A [`Poly2`] of bound `n` stores `C(n + 2, 2)` coefficients in graded
//! lexicographic order with `x` before `y`:
//! `1, x, y, x^2, xy, y^2, x^3, x^2y, ...`. The monomial `x^i y^j` lives at
//! index `d(d + 1)/2 + j` with `d = i + j`, so lowering the bound is a prefix
//! truncation.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{Line, Point, Scalar};

/// `dim Π_n = (n + 1)(n + 2) / 2`.
pub fn dimension(n: usize) -> usize {
    (n + 1) * (n + 2) / 2
}

/// Index of `x^i y^j` in graded-lex order.
pub fn monomial_index(i: usize, j: usize) -> usize {
    let d = i + j;
    d * (d + 1) / 2 + j
}

/// Exponent pairs `(i, j)` of `x^i y^j` for total degree `<= n`, in storage order.
pub fn monomials(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=n).flat_map(|d| (0..=d).map(move |j| (d - j, j)))
}

/// Values of every monomial of degree `<= n` at `p`, in storage order.
pub fn monomial_values(n: usize, p: &Point) -> Vec<Scalar> {
    let mut xs = vec![Scalar::one()];
    let mut ys = vec![Scalar::one()];
    for k in 1..=n {
        xs.push(&xs[k - 1] * &p.x);
        ys.push(&ys[k - 1] * &p.y);
    }
    monomials(n).map(|(i, j)| &xs[i] * &ys[j]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly2 {
    bound: usize,
    coeffs: Vec<Scalar>,
}

impl Poly2 {
    pub fn zero(bound: usize) -> Self {
        Poly2 {
            bound,
            coeffs: vec![Scalar::zero(); dimension(bound)],
        }
    }

    pub fn constant(bound: usize, value: Scalar) -> Self {
        let mut p = Poly2::zero(bound);
        p.coeffs[0] = value;
        p
    }

    /// `coefficient * x^i y^j` with the given bound.
    pub fn monomial(bound: usize, i: usize, j: usize, coefficient: Scalar) -> Result<Self> {
        if i + j > bound {
            return Err(Error::DegreeOverflow {
                degree: i + j,
                bound,
            });
        }
        let mut p = Poly2::zero(bound);
        p.coeffs[monomial_index(i, j)] = coefficient;
        Ok(p)
    }

    /// The linear form of `line` as a polynomial of bound 1.
    pub fn linear(line: &Line) -> Self {
        let (a, b, c) = line.scalars();
        Poly2 {
            bound: 1,
            coeffs: vec![c, a, b],
        }
    }

    /// Panics if `coeffs.len() != dimension(bound)`.
    pub fn from_coeffs(bound: usize, coeffs: Vec<Scalar>) -> Self {
        assert_eq!(
            coeffs.len(),
            dimension(bound),
            "coefficient vector length must be C(bound + 2, 2)"
        );
        Poly2 { bound, coeffs }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    /// Coefficient of `x^i y^j` (zero beyond the bound).
    pub fn coeff(&self, i: usize, j: usize) -> Scalar {
        self.coeffs
            .get(monomial_index(i, j))
            .filter(|_| i + j <= self.bound)
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Highest total degree with a nonzero coefficient; `None` for the zero polynomial.
    pub fn effective_degree(&self) -> Option<usize> {
        let last = self.coeffs.iter().rposition(|c| !c.is_zero())?;
        monomials(self.bound).nth(last).map(|(i, j)| i + j)
    }

    /// Same polynomial under a different bound.
    pub fn with_bound(&self, bound: usize) -> Result<Self> {
        if let Some(degree) = self.effective_degree() {
            if degree > bound {
                return Err(Error::DegreeOverflow { degree, bound });
            }
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(dimension(bound), Scalar::zero());
        Ok(Poly2 { bound, coeffs })
    }

    pub fn evaluate(&self, p: &Point) -> Scalar {
        monomial_values(self.bound, p)
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| m * c)
            .sum()
    }

    /// `line * self` as a polynomial of bound `target`.
    ///
    /// Fails with [`Error::DegreeOverflow`] when the effective degree of
    /// `self` exceeds `target - 1`.
    pub fn multiply_linear(&self, line: &Line, target: usize) -> Result<Self> {
        let degree = self.effective_degree().unwrap_or(0);
        if target == 0 || degree + 1 > target {
            return Err(Error::DegreeOverflow {
                degree: degree + 1,
                bound: target,
            });
        }
        let (a, b, c) = line.scalars();
        let mut out = Poly2::zero(target);
        for ((i, j), coef) in monomials(self.bound).zip(&self.coeffs) {
            if coef.is_zero() {
                continue;
            }
            out.coeffs[monomial_index(i, j)] += &c * coef;
            out.coeffs[monomial_index(i + 1, j)] += &a * coef;
            out.coeffs[monomial_index(i, j + 1)] += &b * coef;
        }
        Ok(out)
    }

    /// `line * self` with the bound raised by one.
    pub fn times_line(&self, line: &Line) -> Self {
        self.multiply_linear(line, self.bound + 1)
            .expect("raising the bound always fits")
    }

    /// `self(P0 + t D)` for the canonical parametrization of `line`.
    pub fn restrict_to_line(&self, line: &Line) -> Poly1 {
        let (base, dir) = line.parametrization();
        let n = self.bound;
        let x_t = Poly1::from_coeffs(vec![base.x, dir.x]);
        let y_t = Poly1::from_coeffs(vec![base.y, dir.y]);
        let mut x_pows = vec![Poly1::from_coeffs(vec![Scalar::one()])];
        let mut y_pows = vec![Poly1::from_coeffs(vec![Scalar::one()])];
        for k in 1..=n {
            x_pows.push(x_pows[k - 1].mul(&x_t));
            y_pows.push(y_pows[k - 1].mul(&y_t));
        }
        let mut out = vec![Scalar::zero(); n + 1];
        for ((i, j), coef) in monomials(n).zip(&self.coeffs) {
            if coef.is_zero() {
                continue;
            }
            for (ki, xi) in x_pows[i].coeffs.iter().enumerate() {
                if xi.is_zero() {
                    continue;
                }
                let lead = coef * xi;
                for (kj, yj) in y_pows[j].coeffs.iter().enumerate() {
                    if !yj.is_zero() {
                        out[ki + kj] += &lead * yj;
                    }
                }
            }
        }
        Poly1 { coeffs: out }
    }

    /// True iff `line` divides `self`, decided by a vanishing restriction.
    pub fn divisible_by(&self, line: &Line) -> bool {
        self.restrict_to_line(line).is_zero()
    }

    /// Exact quotient by `line` (bound lowered by one), or `None` when the
    /// line does not divide the polynomial.
    pub fn divide_by_line(&self, line: &Line) -> Option<Self> {
        if !self.divisible_by(line) {
            return None;
        }
        let quotient = self.back_substitute(line);
        debug_assert!(
            quotient.is_some(),
            "restriction vanished but division left a remainder"
        );
        quotient
    }

    /// Solves `self = line * q` from the top homogeneous component down.
    fn back_substitute(&self, line: &Line) -> Option<Self> {
        let n = self.bound;
        let qb = n.saturating_sub(1);
        let mut q = Poly2::zero(qb);
        if n == 0 {
            return self.is_zero().then_some(q);
        }
        let (a, b, c) = line.scalars();
        let block = |d: usize| d * (d + 1) / 2;
        for d in (1..=n).rev() {
            // r = p_d - c q_d
            let r: Vec<Scalar> = (0..=d)
                .map(|k| {
                    let mut v = self.coeffs[block(d) + k].clone();
                    if d <= qb {
                        v -= &c * &q.coeffs[block(d) + k];
                    }
                    v
                })
                .collect();
            let lower = block(d - 1);
            if !a.is_zero() {
                for k in 0..d {
                    let mut v = r[k].clone();
                    if k > 0 {
                        v -= &b * &q.coeffs[lower + k - 1];
                    }
                    q.coeffs[lower + k] = v / &a;
                }
                if r[d] != &b * &q.coeffs[lower + d - 1] {
                    return None;
                }
            } else {
                if !r[0].is_zero() {
                    return None;
                }
                for k in 1..=d {
                    q.coeffs[lower + k - 1] = &r[k] / &b;
                }
            }
        }
        (self.coeffs[0] == &c * &q.coeffs[0]).then_some(q)
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        Poly2 {
            bound: self.bound,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    fn zip_with(&self, other: &Poly2, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Poly2 {
        let bound = self.bound.max(other.bound);
        let zero = Scalar::zero();
        let coeffs = (0..dimension(bound))
            .map(|k| {
                f(
                    self.coeffs.get(k).unwrap_or(&zero),
                    other.coeffs.get(k).unwrap_or(&zero),
                )
            })
            .collect();
        Poly2 { bound, coeffs }
    }
}

impl Add for &Poly2 {
    type Output = Poly2;
    fn add(self, rhs: &Poly2) -> Poly2 {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: &Poly2) -> Poly2 {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        self.scale(&-Scalar::one())
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for ((i, j), coef) in monomials(self.bound).zip(&self.coeffs) {
            if coef.is_zero() {
                continue;
            }
            let mag = coef.abs();
            if wrote {
                f.write_str(if coef.is_negative() { " - " } else { " + " })?;
            } else if coef.is_negative() {
                f.write_str("-")?;
            }
            let mut mono = String::new();
            for (var, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => mono.push_str(var),
                    _ => mono.push_str(&format!("{var}^{e}")),
                }
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Univariate polynomial in the line parameter `t`, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly1 {
    coeffs: Vec<Scalar>,
}

impl Poly1 {
    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Self {
        Poly1 { coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn bound(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn eval(&self, t: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * t + c)
    }

    fn mul(&self, other: &Poly1) -> Poly1 {
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly1 { coeffs: out }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{int, rat};

    fn poly(bound: usize, terms: &[(usize, usize, i64)]) -> Poly2 {
        let mut p = Poly2::zero(bound);
        for &(i, j, c) in terms {
            p = &p + &Poly2::monomial(bound, i, j, int(c)).unwrap();
        }
        p
    }

    fn line(a: i64, b: i64, c: i64) -> Line {
        Line::new(a, b, c).unwrap()
    }

    #[test]
    fn ordering_is_graded_lex() {
        let order: Vec<_> = monomials(2).collect();
        assert_eq!(order, vec![(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]);
        for (k, (i, j)) in monomials(6).enumerate() {
            assert_eq!(monomial_index(i, j), k);
        }
        assert_eq!(dimension(4), 15);
    }

    #[test]
    fn evaluate_examples() {
        let xy = poly(2, &[(1, 1, 1)]);
        assert_eq!(xy.evaluate(&Point::from_ints(2, 3)), int(6));
        assert_eq!(
            Poly2::zero(3).evaluate(&Point::new(rat(7, 3), int(-2))),
            int(0)
        );
        let circle = poly(2, &[(2, 0, 1), (0, 2, 1), (0, 0, -1)]);
        assert_eq!(circle.evaluate(&Point::new(rat(3, 5), rat(4, 5))), int(0));
    }

    #[test]
    fn multiply_linear_examples() {
        let one = Poly2::constant(0, int(1));
        assert_eq!(
            one.multiply_linear(&line(0, 1, 0), 1).unwrap(),
            poly(1, &[(0, 1, 1)])
        );
        let x = poly(1, &[(1, 0, 1)]);
        assert_eq!(
            x.multiply_linear(&line(1, 0, 0), 2).unwrap(),
            poly(2, &[(2, 0, 1)])
        );
        let x_plus_y = poly(1, &[(1, 0, 1), (0, 1, 1)]);
        assert_eq!(
            x_plus_y.multiply_linear(&line(1, -1, 0), 2).unwrap(),
            poly(2, &[(2, 0, 1), (0, 2, -1)])
        );
        let x2 = poly(2, &[(2, 0, 1)]);
        assert_eq!(
            x2.multiply_linear(&line(1, 0, 0), 2),
            Err(Error::DegreeOverflow {
                degree: 3,
                bound: 2
            })
        );
        // a padded bound is fine as long as the effective degree fits
        assert!(x
            .with_bound(4)
            .unwrap()
            .multiply_linear(&line(1, 0, 0), 2)
            .is_ok());
    }

    #[test]
    fn restriction_examples() {
        let xy = poly(2, &[(1, 1, 1)]);
        assert!(xy.restrict_to_line(&line(1, 0, 0)).is_zero());
        let r = xy.restrict_to_line(&line(0, 1, -1));
        assert_eq!(r.coeffs(), &[int(0), int(1), int(0)]);
        let sq = poly(2, &[(2, 0, 1), (0, 2, 1)]);
        assert_eq!(
            sq.restrict_to_line(&line(0, 1, 0)).coeffs(),
            &[int(0), int(0), int(1)]
        );
    }

    #[test]
    fn division_examples() {
        let xy = poly(2, &[(1, 1, 1)]);
        assert_eq!(
            xy.divide_by_line(&line(1, 0, 0)),
            Some(poly(1, &[(0, 1, 1)]))
        );
        let xy1 = poly(2, &[(1, 1, 1), (0, 0, 1)]);
        assert_eq!(xy1.divide_by_line(&line(1, 0, 0)), None);
        // (x - y)(x + y - 1) = x^2 - y^2 - x + y
        let p = poly(2, &[(2, 0, 1), (0, 2, -1), (1, 0, -1), (0, 1, 1)]);
        assert_eq!(
            p.divide_by_line(&line(1, -1, 0)),
            Some(poly(1, &[(1, 0, 1), (0, 1, 1), (0, 0, -1)]))
        );
    }

    #[test]
    fn division_by_vertical_and_constant_cases() {
        let zero = Poly2::zero(0);
        assert_eq!(zero.divide_by_line(&line(1, 0, 0)), Some(Poly2::zero(0)));
        assert_eq!(
            Poly2::constant(0, int(3)).divide_by_line(&line(0, 1, 2)),
            None
        );
        // (y - 2)^2 divided twice
        let q = Poly2::linear(&line(0, 1, -2)).times_line(&line(0, 1, -2));
        let once = q.divide_by_line(&line(0, 1, -2)).unwrap();
        assert_eq!(once, Poly2::linear(&line(0, 1, -2)));
        assert_eq!(
            once.divide_by_line(&line(0, 1, -2)),
            Some(Poly2::constant(0, int(1)))
        );
    }

    #[test]
    fn display() {
        let p = poly(2, &[(2, 0, 1), (0, 2, -1), (0, 0, -3)]);
        assert_eq!(p.to_string(), "-3 + x^2 - y^2");
        assert_eq!(Poly2::zero(2).to_string(), "0");
        assert_eq!(p.scale(&rat(1, 2)).to_string(), "-3/2 + 1/2*x^2 - 1/2*y^2");
    }

    #[test]
    fn effective_degree() {
        assert_eq!(Poly2::zero(3).effective_degree(), None);
        assert_eq!(poly(4, &[(1, 1, 2)]).effective_degree(), Some(2));
        assert!(poly(4, &[(1, 1, 2)]).with_bound(1).is_err());
    }
}
