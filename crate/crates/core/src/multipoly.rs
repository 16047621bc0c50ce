//! Sparse multivariate polynomials over exact rationals.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors under the graded
//! lexicographic order, so iteration, equality, and serialization are all
//! deterministic. Zero coefficients are never stored. Binary operations
//! panic on mismatched variable counts; that is a programming error, not a
//! data error (typed inputs are validated where they enter the crate).
//!
//! JSON form: `{"nvars": n, "terms": [{"exp": [e1..en], "coeff": "p/q"}]}`
//! with terms sorted graded-lex ascending and rationals in the canonical
//! `p/q` form (`/q` omitted when the denominator is 1).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{parse_rat, Rat};

/// Exponent vector of one monomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Exponentwise difference, or `None` when some exponent underflows.
    fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then lex on exponents.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial(vec![0; nvars]), c);
        p
    }

    /// The variable `m_{idx+1}` as a polynomial.
    pub fn var(nvars: usize, idx: usize) -> Self {
        assert!(idx < nvars, "variable index {idx} out of range for {nvars} vars");
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Self::monomial(nvars, e, Rat::one())
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, coeff: Rat) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length != nvars");
        let mut p = Self::zero(nvars);
        p.add_term(Monomial(exps), coeff);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded-lex ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    /// Coefficient of the given exponent vector (zero when absent).
    pub fn coeff(&self, exps: &[u32]) -> Rat {
        assert_eq!(exps.len(), self.nvars);
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// Total degree; zero for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// `Some(d)` when every stored term has total degree `d` (the zero
    /// polynomial is homogeneous of degree 0 by convention).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next().unwrap_or(0);
        if it.all(|e| e == d) {
            Some(d)
        } else {
            None
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, s: &Rat) -> MultiPoly {
        if s.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * s))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.nvars {
            return Err(Error::Input(format!(
                "evaluation point has {} coordinates, polynomial has {} variables",
                point.len(),
                self.nvars
            )));
        }
        // power tables per variable up to the largest exponent used
        let mut maxe = vec![0u32; self.nvars];
        for m in self.terms.keys() {
            for (i, e) in m.0.iter().enumerate() {
                maxe[i] = maxe[i].max(*e);
            }
        }
        let powers: Vec<Vec<Rat>> = point
            .iter()
            .enumerate()
            .map(|(i, x)| {
                let mut v = Vec::with_capacity(maxe[i] as usize + 1);
                v.push(Rat::one());
                for e in 1..=maxe[i] {
                    let prev = v[(e - 1) as usize].clone();
                    v.push(prev * x);
                }
                v
            })
            .collect();
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, e) in m.0.iter().enumerate() {
                if *e > 0 {
                    t *= &powers[i][*e as usize];
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Exact quotient `self / den`; fails unless the division is exact.
    ///
    /// Peels leading terms in graded-lex order; an indivisible leading
    /// monomial proves the division inexact.
    pub fn divide_exact(&self, den: &MultiPoly) -> Result<MultiPoly> {
        assert_eq!(self.nvars, den.nvars, "nvars mismatch in division");
        if den.is_zero() {
            return Err(Error::Input("division by the zero polynomial".into()));
        }
        let (dlm, dlc) = {
            let (m, c) = den.terms.iter().next_back().unwrap();
            (m.clone(), c.clone())
        };
        let mut rem = self.clone();
        let mut quo = MultiPoly::zero(self.nvars);
        while !rem.is_zero() {
            let (rlm, rlc) = {
                let (m, c) = rem.terms.iter().next_back().unwrap();
                (m.clone(), c.clone())
            };
            let qm = rlm.checked_div(&dlm).ok_or_else(|| {
                Error::Internal("inexact polynomial division".into())
            })?;
            let qc = rlc / &dlc;
            let qterm = MultiPoly::monomial(self.nvars, qm.0.clone(), qc);
            rem = &rem - &(&qterm * den);
            quo = &quo + &qterm;
        }
        Ok(quo)
    }

    /// Polynomial with variables `a` and `b` exchanged.
    pub fn swap_vars(&self, a: usize, b: usize) -> MultiPoly {
        assert!(a < self.nvars && b < self.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.swap(a, b);
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Substitute `repl` (same variable count) for variable `var`.
    pub fn substitute(&self, var: usize, repl: &MultiPoly) -> MultiPoly {
        assert!(var < self.nvars);
        assert_eq!(self.nvars, repl.nvars, "nvars mismatch in substitution");
        let maxe = self
            .terms
            .keys()
            .map(|m| m.0[var])
            .max()
            .unwrap_or(0);
        let mut repl_pows = Vec::with_capacity(maxe as usize + 1);
        repl_pows.push(MultiPoly::one(self.nvars));
        for e in 1..=maxe {
            let next = &repl_pows[(e - 1) as usize] * repl;
            repl_pows.push(next);
        }
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let ev = e[var];
            e[var] = 0;
            let base = MultiPoly::monomial(self.nvars, e, c.clone());
            out = &out + &(&base * &repl_pows[ev as usize]);
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<MultiPoly> {
        serde_json::from_str(s).map_err(|e| Error::Input(format!("bad polynomial JSON: {e}")))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "nvars mismatch in +");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "nvars mismatch in -");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "nvars mismatch in *");
        let mut out = MultiPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (i, e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*m{}", i + 1)?,
                    _ => write!(f, "*m{}^{}", i + 1, e)?,
                }
            }
        }
        Ok(())
    }
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            exp: &'a [u32],
            coeff: String,
        }
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(m, c)| Term {
                exp: &m.0,
                coeff: c.to_string(),
            })
            .collect();
        let mut st = s.serialize_struct("MultiPoly", 2)?;
        st.serialize_field("nvars", &self.nvars)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct TermRepr {
            exp: Vec<u32>,
            coeff: String,
        }
        #[derive(Deserialize)]
        struct PolyRepr {
            nvars: usize,
            terms: Vec<TermRepr>,
        }
        let repr = PolyRepr::deserialize(d)?;
        let mut p = MultiPoly::zero(repr.nvars);
        for t in repr.terms {
            if t.exp.len() != repr.nvars {
                return Err(D::Error::custom(format!(
                    "exponent vector of length {} in a {}-variable polynomial",
                    t.exp.len(),
                    repr.nvars
                )));
            }
            let c = parse_rat(&t.coeff).map_err(D::Error::custom)?;
            p.add_term(Monomial(t.exp), c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    fn m(nvars: usize, exps: &[u32], c: i64) -> MultiPoly {
        MultiPoly::monomial(nvars, exps.to_vec(), rat(c))
    }

    #[test]
    fn additive_inverse() {
        let x = MultiPoly::var(1, 0);
        assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let m1 = MultiPoly::var(2, 0);
        let m2 = MultiPoly::var(2, 1);
        let lhs = &(&m1 - &m2) * &(&m1 + &m2);
        let rhs = &m(2, &[2, 0], 1) - &m(2, &[0, 2], 1);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn square_of_trinomial() {
        let s = &(&MultiPoly::var(3, 0) + &MultiPoly::var(3, 1)) + &MultiPoly::var(3, 2);
        let sq = s.pow(2);
        let mut expect = MultiPoly::zero(3);
        for i in 0..3 {
            let mut e = vec![0; 3];
            e[i] = 2;
            expect = &expect + &m(3, &e, 1);
        }
        for i in 0..3 {
            for j in (i + 1)..3 {
                let mut e = vec![0; 3];
                e[i] = 1;
                e[j] = 1;
                expect = &expect + &m(3, &e, 2);
            }
        }
        assert_eq!(sq, expect);
    }

    #[test]
    fn eval_examples() {
        let m1 = MultiPoly::var(2, 0);
        let m2 = MultiPoly::var(2, 1);
        assert_eq!((&m1 - &m2).eval(&[rat(1), rat(-1)]).unwrap(), rat(2));

        let sum3 = &(&MultiPoly::var(3, 0) + &MultiPoly::var(3, 1)) + &MultiPoly::var(3, 2);
        assert_eq!(sum3.eval(&[rat(3), rat(-1), rat(-2)]).unwrap(), rat(0));

        assert!(sum3.eval(&[rat(1), rat(2)]).is_err());
    }

    #[test]
    fn exact_division() {
        let m1 = MultiPoly::var(2, 0);
        let m2 = MultiPoly::var(2, 1);
        let num = &m(2, &[2, 0], 1) - &m(2, &[0, 2], 1);
        let q = num.divide_exact(&(&m1 - &m2)).unwrap();
        assert_eq!(q, &m1 + &m2);

        // inexact division is a hard error
        assert!(m(2, &[1, 0], 1).divide_exact(&m(2, &[0, 1], 1)).is_err());
        assert!(m(2, &[1, 0], 1)
            .divide_exact(&MultiPoly::zero(2))
            .is_err());
    }

    #[test]
    #[should_panic(expected = "nvars mismatch")]
    fn mismatched_nvars_panics() {
        let _ = &MultiPoly::var(2, 0) + &MultiPoly::var(3, 0);
    }

    #[test]
    fn json_round_trip_and_shape() {
        let p = &(&m(3, &[2, 0, 0], 1) - &m(3, &[0, 1, 1], 3)) + &MultiPoly::one(3);
        let s = p.to_json();
        // graded-lex ascending: constant first, then degree-2 terms with
        // (0,1,1) before (2,0,0)
        assert_eq!(
            s,
            r#"{"nvars":3,"terms":[{"exp":[0,0,0],"coeff":"1"},{"exp":[0,1,1],"coeff":"-3"},{"exp":[2,0,0],"coeff":"1"}]}"#
        );
        let back = MultiPoly::from_json(&s).unwrap();
        assert_eq!(back, p);
        assert_eq!(back.to_json(), s);
    }

    #[test]
    fn json_rejects_bad_exponent_length() {
        let s = r#"{"nvars":2,"terms":[{"exp":[1],"coeff":"1"}]}"#;
        assert!(MultiPoly::from_json(s).is_err());
    }

    prop_compose! {
        fn arb_poly(nvars: usize)
            (terms in prop::collection::vec(
                (prop::collection::vec(0u32..4, nvars), -6i64..=6),
                0..5,
            ))
            -> MultiPoly
        {
            let mut p = MultiPoly::zero(nvars);
            for (e, c) in terms {
                p.add_term(Monomial(e), rat(c));
            }
            p
        }
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(3), b in arb_poly(3), c in arb_poly(3)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn division_inverts_multiplication(a in arb_poly(3), b in arb_poly(3)) {
            prop_assume!(!b.is_zero());
            let q = (&a * &b).divide_exact(&b).unwrap();
            prop_assert_eq!(q, a);
        }

        #[test]
        fn eval_is_a_homomorphism(a in arb_poly(3), b in arb_poly(3), pt in prop::collection::vec(-5i64..=5, 3)) {
            let pt: Vec<Rat> = pt.into_iter().map(rat).collect();
            let lhs = (&a * &b).eval(&pt).unwrap();
            let rhs = a.eval(&pt).unwrap() * b.eval(&pt).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn serialization_round_trips(a in arb_poly(3)) {
            let s = a.to_json();
            let back = MultiPoly::from_json(&s).unwrap();
            prop_assert_eq!(&back, &a);
            prop_assert_eq!(back.to_json(), s);
        }
    }
}
