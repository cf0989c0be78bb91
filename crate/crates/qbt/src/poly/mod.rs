//! Sparse multivariate polynomials over Q and prime fields, rational maps,
//! Jacobians, and Macaulay-matrix Hilbert functions.

mod macaulay;
mod parse;

pub use macaulay::{fit_hilbert_polynomial, ideal_hilbert_function, FitOutcome, MacaulayError};
pub use parse::{parse_poly, ParseError};

use crate::exactmath::{ExactMatrix, Field, PrimeField, Rational, Rationals};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector with graded reverse lexicographic order. The order is
/// fixed once so Macaulay matrices and printed polynomials are stable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    /// Grevlex: compare total degree first; ties broken by the LAST variable
    /// with differing exponent, smaller exponent ranking higher.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let d1 = self.degree();
        let d2 = other.degree();
        if d1 != d2 {
            return d1.cmp(&d2);
        }
        for i in (0..self.0.len()).rev() {
            if self.0[i] != other.0[i] {
                // in grevlex, larger exponent on a later variable means smaller
                return other.0[i].cmp(&self.0[i]);
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial: no duplicate exponent vectors, no zero
/// coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiPoly<F: Field> {
    pub nvars: usize,
    pub terms: BTreeMap<Monomial, F::Elem>,
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn from_terms(nvars: usize, field: &F, terms: Vec<(Vec<u16>, F::Elem)>) -> Self {
        let mut map: BTreeMap<Monomial, F::Elem> = BTreeMap::new();
        for (expo, coeff) in terms {
            assert_eq!(expo.len(), nvars);
            let m = Monomial(expo);
            match map.get_mut(&m) {
                Some(c) => {
                    let s = field.add(c, &coeff);
                    if field.is_zero(&s) {
                        map.remove(&m);
                    } else {
                        *c = s;
                    }
                }
                None => {
                    if !field.is_zero(&coeff) {
                        map.insert(m, coeff);
                    }
                }
            }
        }
        MultiPoly { nvars, terms: map }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut deg = None;
        for m in self.terms.keys() {
            match deg {
                None => deg = Some(m.degree()),
                Some(d) if d != m.degree() => return false,
                _ => {}
            }
        }
        true
    }

    pub fn eval(&self, field: &F, point: &[F::Elem]) -> F::Elem {
        assert_eq!(point.len(), self.nvars);
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = field.mul(&t, &point[i]);
                }
            }
            acc = field.add(&acc, &t);
        }
        acc
    }

    /// Partial derivative with respect to variable j.
    pub fn derivative(&self, field: &F, j: usize) -> MultiPoly<F> {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            if m.0[j] == 0 {
                continue;
            }
            let mut e = m.0.clone();
            let k = e[j];
            e[j] -= 1;
            let mut coeff = c.clone();
            let mut kk = field.zero();
            for _ in 0..k {
                kk = field.add(&kk, &field.one());
            }
            coeff = field.mul(&coeff, &kk);
            terms.push((e, coeff));
        }
        MultiPoly::from_terms(self.nvars, field, terms)
    }

    /// Substitutes variable j by a linear form in the remaining variables
    /// (the form's slot j must be zero) and drops the slot, returning a
    /// polynomial in nvars - 1 variables.
    pub fn substitute_var(&self, field: &F, j: usize, linear: &[F::Elem]) -> MultiPoly<F> {
        assert_eq!(linear.len(), self.nvars);
        assert!(field.is_zero(&linear[j]));
        let mut terms: Vec<(Vec<u16>, F::Elem)> = Vec::new();
        for (m, c) in &self.terms {
            let e = m.0[j];
            // expand (sum_i linear[i] x_i)^e monomial by monomial
            let mut partial: Vec<(Vec<u16>, F::Elem)> = vec![(
                {
                    let mut base = m.0.clone();
                    base[j] = 0;
                    base
                },
                c.clone(),
            )];
            for _ in 0..e {
                let mut next = Vec::new();
                for (expo, coeff) in &partial {
                    for (i, l) in linear.iter().enumerate() {
                        if field.is_zero(l) {
                            continue;
                        }
                        let mut e2 = expo.clone();
                        e2[i] += 1;
                        next.push((e2, field.mul(coeff, l)));
                    }
                }
                partial = next;
            }
            terms.extend(partial);
        }
        let folded = MultiPoly::from_terms(self.nvars, field, terms);
        // drop slot j
        let mut out = Vec::new();
        for (m, c) in folded.terms {
            let mut e = m.0;
            e.remove(j);
            out.push((e, c));
        }
        MultiPoly::from_terms(self.nvars - 1, field, out)
    }
}

impl MultiPoly<Rationals> {
    /// Reduction mod p, term by term.
    pub fn reduce_mod(&self, field: &PrimeField) -> MultiPoly<PrimeField> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.0.clone(), field.from_rational(c)))
            .collect();
        MultiPoly::from_terms(self.nvars, field, terms)
    }

    /// Canonical printer: terms in descending grevlex, coefficients as `p`
    /// or `p/q`, `*`-joined powers `x<i>^<e>`. Round-trips through
    /// `parse_poly` bit-exactly.
    pub fn print(&self, prefix: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let is_constant = m.degree() == 0;
            let one = abs == Rational::from_integer(1.into());
            if !one || is_constant {
                out.push_str(&abs.to_string());
            }
            let mut first_factor = one && !is_constant;
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first_factor {
                    out.push('*');
                }
                first_factor = false;
                out.push_str(prefix);
                out.push_str(&i.to_string());
                if e > 1 {
                    out.push('^');
                    out.push_str(&e.to_string());
                }
            }
            if one && !is_constant && first_factor {
                // degree > 0 but all exponents zero cannot happen
                unreachable!();
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly<Rationals> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.print("x"))
    }
}

/// A point of projective space with exact rational coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjPoint(pub Vec<Rational>);

impl ProjPoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self, &'static str> {
        if coords.iter().all(|c| c.is_zero()) {
            return Err("projective point needs a nonzero coordinate");
        }
        Ok(ProjPoint(coords))
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        ProjPoint::new(coords.iter().map(|&c| crate::exactmath::rat_i64(c)).collect()).unwrap()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Forms of equal degree defining P^n --> P^N, optionally with inverse forms
/// and image equations.
#[derive(Debug, Clone)]
pub struct RationalMap {
    pub source_dim: usize,
    pub target_dim: usize,
    pub forms: Vec<MultiPoly<Rationals>>,
    pub inverse_forms: Option<Vec<MultiPoly<Rationals>>>,
    pub image_equations: Option<Vec<MultiPoly<Rationals>>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapError {
    NotHomogeneous,
    MixedDegrees,
    AllZero,
    WrongVariableCount,
}

impl fmt::Display for MapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MapError::NotHomogeneous => "forms must be homogeneous",
            MapError::MixedDegrees => "forms must share a common degree",
            MapError::AllZero => "at least one form must be nonzero",
            MapError::WrongVariableCount => "form has wrong number of variables",
        };
        write!(f, "{s}")
    }
}

impl std::error::Error for MapError {}

impl RationalMap {
    pub fn new(forms: Vec<MultiPoly<Rationals>>) -> Result<Self, MapError> {
        let nv = forms.first().map(|f| f.nvars).ok_or(MapError::AllZero)?;
        if forms.iter().any(|f| f.nvars != nv) {
            return Err(MapError::WrongVariableCount);
        }
        if forms.iter().all(|f| f.is_zero()) {
            return Err(MapError::AllZero);
        }
        let mut deg = None;
        for f in &forms {
            if !f.is_homogeneous() {
                return Err(MapError::NotHomogeneous);
            }
            if let Some(d) = f.total_degree() {
                match deg {
                    None => deg = Some(d),
                    Some(d0) if d0 != d => return Err(MapError::MixedDegrees),
                    _ => {}
                }
            }
        }
        Ok(RationalMap {
            source_dim: nv - 1,
            target_dim: forms.len() - 1,
            forms,
            inverse_forms: None,
            image_equations: None,
        })
    }

    pub fn with_inverse(mut self, inverse: Vec<MultiPoly<Rationals>>) -> Self {
        self.inverse_forms = Some(inverse);
        self
    }

    pub fn with_image(mut self, image: Vec<MultiPoly<Rationals>>) -> Self {
        self.image_equations = Some(image);
        self
    }
}

/// Result of evaluating a rational map at a point.
#[derive(Debug, Clone, PartialEq)]
pub enum MapValue {
    Point(ProjPoint),
    InBaseLocus,
}

pub fn eval_map(map: &RationalMap, p: &ProjPoint) -> MapValue {
    assert_eq!(p.len(), map.source_dim + 1, "point has wrong length");
    let f = Rationals;
    let coords: Vec<Rational> = map.forms.iter().map(|form| form.eval(&f, &p.0)).collect();
    if coords.iter().all(|c| c.is_zero()) {
        MapValue::InBaseLocus
    } else {
        MapValue::Point(ProjPoint(coords))
    }
}

/// Projective equality: all 2x2 minors p_i q_j - p_j q_i vanish.
pub fn proj_equal(p: &ProjPoint, q: &ProjPoint) -> bool {
    assert_eq!(p.len(), q.len(), "points must have equal length");
    let n = p.len();
    for i in 0..n {
        for j in (i + 1)..n {
            if &p.0[i] * &q.0[j] != &p.0[j] * &q.0[i] {
                return false;
            }
        }
    }
    true
}

/// Exact rank of the (N+1) x (n+1) Jacobian of the map's forms at a point.
/// The fiber dimension through a point off the base locus is
/// n + 1 - rank.
pub fn jacobian_rank(map: &RationalMap, p: &ProjPoint) -> usize {
    let f = Rationals;
    let nv = map.source_dim + 1;
    let mut entries = Vec::with_capacity(map.forms.len() * nv);
    for form in &map.forms {
        for j in 0..nv {
            entries.push(form.derivative(&f, j).eval(&f, &p.0));
        }
    }
    ExactMatrix::from_rationals(map.forms.len(), nv, entries).rank_bareiss()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat_i64;

    fn q(s: &str, nv: usize) -> MultiPoly<Rationals> {
        parse_poly(s, nv, "x").unwrap()
    }

    #[test]
    fn monomial_grevlex() {
        // degree dominates
        assert!(Monomial(vec![2, 0]) > Monomial(vec![0, 1]));
        // same degree: x0^2 > x0 x1 > x1^2 in grevlex
        assert!(Monomial(vec![2, 0]) > Monomial(vec![1, 1]));
        assert!(Monomial(vec![1, 1]) > Monomial(vec![0, 2]));
    }

    #[test]
    fn parse_and_print_roundtrip() {
        let p = q("x5^2-x4*x6", 7);
        assert_eq!(p.terms.len(), 2);
        assert_eq!(p.print("x"), "x5^2-x4*x6");
        let z = q("0", 3);
        assert!(z.is_zero());
        let y = parse_poly("y0*y5-y2^2", 6, "y").unwrap();
        assert_eq!(y.print("y"), "y0*y5-y2^2");
        let c = q("2*x0^2+1/2*x1*x2", 3);
        assert_eq!(parse_poly(&c.print("x"), 3, "x").unwrap(), c);
    }

    #[test]
    fn parse_errors() {
        assert!(parse_poly("x9", 3, "x").is_err());
        assert!(parse_poly("x0^", 3, "x").is_err());
        assert!(parse_poly("wibble", 3, "x").is_err());
    }

    #[test]
    fn stereographic_eval() {
        // n = 3, s = 2: forms x0 x3, x1 x3, x2 x3, x3^2, x0^2 + x1^2 + x2^2
        let forms = vec![
            q("x0*x3", 4),
            q("x1*x3", 4),
            q("x2*x3", 4),
            q("x3^2", 4),
            q("x0^2+x1^2+x2^2", 4),
        ];
        let map = RationalMap::new(forms).unwrap();
        match eval_map(&map, &ProjPoint::from_i64(&[1, 0, 0, 1])) {
            MapValue::Point(p) => {
                assert!(proj_equal(&p, &ProjPoint::from_i64(&[1, 0, 0, 1, 1])));
            }
            MapValue::InBaseLocus => panic!("not in base locus"),
        }
        // a point of V(forms) maps to InBaseLocus
        assert_eq!(
            eval_map(&map, &ProjPoint::from_i64(&[0, 1, 0, 0])),
            MapValue::InBaseLocus
        );
    }

    #[test]
    fn proj_equal_cases() {
        assert!(proj_equal(&ProjPoint::from_i64(&[1, 2]), &ProjPoint::from_i64(&[2, 4])));
        assert!(!proj_equal(&ProjPoint::from_i64(&[1, 0]), &ProjPoint::from_i64(&[0, 1])));
        let p = ProjPoint::from_i64(&[3, -5, 7]);
        let scaled = ProjPoint(p.0.iter().map(|c| c * rat_i64(-9)).collect());
        assert!(proj_equal(&p, &scaled));
    }

    #[test]
    fn jacobian_full_rank_linear() {
        let forms = vec![q("x0*x0", 3), q("x1*x0", 3), q("x2*x0", 3)];
        let map = RationalMap::new(forms).unwrap();
        assert_eq!(jacobian_rank(&map, &ProjPoint::from_i64(&[1, 2, 3])), 3);
    }

    #[test]
    fn substitute_and_derive() {
        let f = Rationals;
        let p = q("x0^2+x1*x2", 3);
        let dp = p.derivative(&f, 0);
        assert_eq!(dp.print("x"), "2*x0");
        // x2 -> x0 + x1
        let lin = vec![rat_i64(1), rat_i64(1), rat_i64(0)];
        let s = p.substitute_var(&f, 2, &lin);
        assert_eq!(s.nvars, 2);
        assert_eq!(s.print("x"), "x0^2+x0*x1+x1^2");
    }
}
