//! The partition algebra `CA_k(n)`: the free module on order-`k` diagrams
//! with the product `d_a · d_b = n^l(a,b) d_{a∘b}` extended bilinearly, where
//! `l(a,b)` counts the components confined to the middle row when `a` is
//! stacked on top of `b`.

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::Rational;
use crate::diagram::{DiagramError, PartitionDiagram};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("element orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("evaluation at a pole of a coefficient")]
    Pole,
}

/// A permutation of `{1..k}`, stored as 0-based images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Permutation {
            images: (0..k).collect(),
        }
    }

    /// From 1-based one-line notation `[p(1), .., p(k)]`.
    pub fn from_one_line(line: &[usize]) -> Option<Self> {
        let k = line.len();
        let mut seen = vec![false; k];
        for &v in line {
            if v == 0 || v > k || seen[v - 1] {
                return None;
            }
            seen[v - 1] = true;
        }
        Some(Permutation {
            images: line.iter().map(|&v| v - 1).collect(),
        })
    }

    /// Transposition of 1-based points `a` and `b`.
    pub fn transposition(k: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..k).collect();
        images.swap(a - 1, b - 1);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// Function composition `self ∘ first`: `first` acts first.
    pub fn compose(&self, first: &Permutation) -> Permutation {
        Permutation {
            images: first.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    /// Sign of the permutation as +1 / -1.
    pub fn sign(&self) -> i32 {
        let mut seen = vec![false; self.images.len()];
        let mut sign = 1;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// All `k!` permutations in lexicographic one-line order.
    pub fn all(k: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut images: Vec<usize> = (0..k).collect();
        loop {
            out.push(Permutation {
                images: images.clone(),
            });
            // Next lexicographic permutation.
            let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| images[i] < images[i + 1])
            else {
                return out;
            };
            let j = (i + 1..k).rev().find(|&j| images[j] > images[i]).unwrap();
            images.swap(i, j);
            images[i + 1..].reverse();
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    /// One-line notation, 1-based: `[2,1,3]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}

/// A finite linear combination of order-`k` diagrams with coefficients in the
/// scalar field. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement<S: Scalar> {
    order: usize,
    terms: BTreeMap<PartitionDiagram, S>,
}

impl<S: Scalar> AlgebraElement<S> {
    pub fn zero(k: usize) -> Self {
        AlgebraElement {
            order: k,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(k: usize) -> Self {
        Self::from_diagram(PartitionDiagram::identity(k))
    }

    pub fn from_diagram(d: PartitionDiagram) -> Self {
        let order = d.order();
        let mut terms = BTreeMap::new();
        terms.insert(d, S::one());
        AlgebraElement { order, terms }
    }

    pub fn from_terms(
        k: usize,
        terms: impl IntoIterator<Item = (PartitionDiagram, S)>,
    ) -> Result<Self, AlgebraError> {
        let mut out = Self::zero(k);
        for (d, c) in terms {
            if d.order() != k {
                return Err(AlgebraError::OrderMismatch(k, d.order()));
            }
            out.add_term(d, c);
        }
        Ok(out)
    }

    /// Adds `c * d`, dropping the term if the total cancels.
    pub fn add_term(&mut self, d: PartitionDiagram, c: S) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(d.order(), self.order);
        match self.terms.get_mut(&d) {
            Some(old) => {
                let sum = old.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&d);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.terms.insert(d, c);
            }
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> &BTreeMap<PartitionDiagram, S> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: &PartitionDiagram) -> S {
        self.terms.get(d).cloned().unwrap_or_else(S::zero)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if self.order != rhs.order {
            return Err(AlgebraError::OrderMismatch(self.order, rhs.order));
        }
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        AlgebraElement {
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(d, c)| (d.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.order);
        }
        AlgebraElement {
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(d, x)| (d.clone(), x.mul(c)))
                .collect(),
        }
    }

    /// The algebra product: bilinear extension of
    /// `d_a · d_b = n^l(a,b) d_{a∘b}`, with `n` the algebra parameter as a
    /// scalar.
    pub fn multiply(&self, rhs: &Self, n: &S) -> Result<Self, AlgebraError> {
        if self.order != rhs.order {
            return Err(AlgebraError::OrderMismatch(self.order, rhs.order));
        }
        let mut npows = vec![S::one()];
        for _ in 0..self.order {
            npows.push(npows.last().unwrap().mul(n));
        }
        let mut out = Self::zero(self.order);
        for (da, ca) in &self.terms {
            for (db, cb) in &rhs.terms {
                let r = da.compose(db)?;
                let c = ca.mul(cb).mul(&npows[r.middle_components]);
                out.add_term(r.diagram, c);
            }
        }
        Ok(out)
    }

    /// The permutation diagram `{{i, p(i)'}}` with coefficient one.
    pub fn from_permutation(p: &Permutation) -> Self {
        let k = p.degree();
        let blocks = (1..=k)
            .map(|i| vec![i as i32, -(p.apply(i) as i32)])
            .collect();
        Self::from_diagram(PartitionDiagram::new(k, blocks).expect("permutation blocks"))
    }

    /// JSON form `{"k": .., "terms": [{"diagram": .., "coeff": ..}, ..]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<_> = self
            .terms
            .iter()
            .map(|(d, c)| {
                serde_json::json!({ "diagram": d.to_json()["blocks"], "coeff": c.to_json() })
            })
            .collect();
        serde_json::json!({ "k": self.order, "terms": terms })
    }
}

impl<S: Scalar> fmt::Debug for AlgebraElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{d}")?;
        }
        Ok(())
    }
}

/// Specializes a symbolic element at `n = x`; fails if any coefficient has a
/// pole there.
pub fn evaluate_element(
    e: &AlgebraElement<crate::arith::RationalFunction>,
    x: &Rational,
) -> Result<AlgebraElement<Rational>, AlgebraError> {
    let mut out = AlgebraElement::zero(e.order());
    for (d, c) in e.terms() {
        let v = c.eval(x).map_err(|_| AlgebraError::Pole)?;
        out.add_term(d.clone(), v);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat_int, RationalFunction};
    use crate::diagram::enumerate_diagrams;

    type Elt = AlgebraElement<RationalFunction>;

    fn nvar() -> RationalFunction {
        RationalFunction::variable()
    }

    #[test]
    fn permutation_basics() {
        let c3 = Permutation::from_one_line(&[2, 3, 1]).unwrap();
        assert_eq!(c3.apply(1), 2);
        assert_eq!(c3.sign(), 1);
        assert_eq!(c3.compose(&c3.inverse()), Permutation::identity(3));
        // compose applies the right factor first: (1 2) after (2 3).
        let a = Permutation::transposition(3, 1, 2);
        let b = Permutation::transposition(3, 2, 3);
        assert_eq!(a.compose(&b), Permutation::from_one_line(&[2, 3, 1]).unwrap());
        assert_eq!(Permutation::all(3).len(), 6);
        assert!(Permutation::from_one_line(&[1, 1]).is_none());
    }

    #[test]
    fn worked_products_in_ca2() {
        let ds = enumerate_diagrams(2).unwrap();
        let n = nvar();
        let d = |i: usize| Elt::from_diagram(ds[i - 1].clone());
        // d_pi2 d_pi10 = n d_pi1
        assert_eq!(
            d(2).multiply(&d(10), &n).unwrap(),
            d(1).scale(&n)
        );
        // d_pi7 d_pi7 = d_pi9
        assert_eq!(d(7).multiply(&d(7), &n).unwrap(), d(9));
        // one is neutral on the whole basis
        for i in 1..=15 {
            assert_eq!(Elt::one(2).multiply(&d(i), &n).unwrap(), d(i));
            assert_eq!(d(i).multiply(&Elt::one(2), &n).unwrap(), d(i));
        }
    }

    #[test]
    fn worked_product_in_ca5() {
        fn d5(blocks: &[&[i32]]) -> Elt {
            Elt::from_diagram(
                PartitionDiagram::new(5, blocks.iter().map(|b| b.to_vec()).collect()).unwrap(),
            )
        }
        let a = d5(&[&[1, 2, 4, 5, -4], &[3, -2], &[-1, -5], &[-3]]);
        let b = d5(&[&[2, -5], &[4, -4, -3], &[1, -2, -1], &[3], &[5]]);
        let want = d5(&[&[1, 2, 4, 5, -4, -3], &[3, -5], &[-1, -2]]).scale(&nvar());
        assert_eq!(a.multiply(&b, &nvar()).unwrap(), want);
    }

    #[test]
    fn linear_ops() {
        let ds = enumerate_diagrams(2).unwrap();
        let a = Elt::from_diagram(ds[0].clone());
        assert_eq!(a.add(&Elt::zero(2)).unwrap(), a);
        assert!(a.sub(&a).unwrap().is_zero());
        // (1/(n-1)) * (n-1) * d = d
        let c = RationalFunction::from_integer_coeffs(&[1], &[-1, 1]).unwrap();
        let cinv = c.inv().unwrap();
        assert_eq!(a.scale(&c).scale(&cinv), a);
        assert!(Elt::one(2).add(&Elt::one(3)).is_err());
    }

    #[test]
    fn permutation_elements_multiply_without_n() {
        // Permutation diagrams never produce middle components, so products of
        // embedded permutations have constant coefficients.
        let n = nvar();
        let ds = enumerate_diagrams(2).unwrap();
        let t = Permutation::transposition(2, 1, 2);
        let e = Elt::from_permutation(&t);
        assert_eq!(e, Elt::from_diagram(ds[6].clone()));
        assert_eq!(e.multiply(&e, &n).unwrap(), Elt::one(2));
        let c3 = Permutation::from_one_line(&[2, 3, 1]).unwrap();
        let blocks = AlgebraElement::<RationalFunction>::from_permutation(&c3);
        let want = PartitionDiagram::new(3, vec![vec![1, -2], vec![2, -3], vec![3, -1]]).unwrap();
        assert_eq!(blocks, Elt::from_diagram(want));
    }

    #[test]
    fn evaluate_element_is_pointwise() {
        let ds = enumerate_diagrams(2).unwrap();
        let f = RationalFunction::from_integer_coeffs(&[1], &[-1, 1]).unwrap();
        let mut e = Elt::zero(2);
        e.add_term(ds[0].clone(), f);
        let at3 = evaluate_element(&e, &rat_int(3)).unwrap();
        assert_eq!(at3.coeff(&ds[0]), crate::arith::rat(1, 2));
        assert!(evaluate_element(&e, &rat_int(1)).is_err());
    }
}
