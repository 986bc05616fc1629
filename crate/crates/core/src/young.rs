//! Young's matrix-unit construction in symmetric group algebras.
//!
//! Tableaux use the French convention: row 1 is the bottom row, and row
//! indices increase upwards. Standard Young tableaux of a fixed shape are
//! ordered by Young's first-letter order, with the convention (pinned by the
//! worked three-letter expansions this construction must reproduce) that the
//! tableau placing the first letter of disagreement in the *higher* French
//! row comes first.
//!
//! Group-algebra products compose permutations right-to-left: in `x · y` the
//! permutations of `y` act first. Under this convention the classical unit
//! formula
//! `s_ij = sigma_ij · gamma_j · (1 - gamma_{j+1}) ··· (1 - gamma_f)`
//! with `gamma_i = (f/k!) N(S_i) P(S_i)` yields a matrix-unit basis with
//! `s_ij s_pq = [j = p] s_iq`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::algebra::{AlgebraElement, Permutation};
use crate::arith::{rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum YoungError {
    #[error("tableau index {index} out of range 1..={count}")]
    IndexError { index: usize, count: usize },
    #[error("parts are not weakly decreasing: {0:?}")]
    InvalidPartition(Vec<usize>),
    #[error("rows do not form a standard Young tableau")]
    InvalidTableau,
}

/// An integer partition: weakly decreasing positive parts; the empty
/// partition is `()`.
///
/// The derived order compares by size first and then lexicographically on the
/// parts, which is the order used to index vacillating tableaux.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerPartition {
    parts: Vec<usize>,
}

impl IntegerPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self, YoungError> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(YoungError::InvalidPartition(parts));
        }
        Ok(IntegerPartition { parts })
    }

    pub fn empty() -> Self {
        IntegerPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn single_row(m: usize) -> Self {
        if m == 0 {
            Self::empty()
        } else {
            IntegerPartition { parts: vec![m] }
        }
    }

    pub fn single_column(m: usize) -> Self {
        IntegerPartition { parts: vec![1; m] }
    }

    /// Removes one box from the topmost (northernmost) row; the empty
    /// partition is unchanged.
    pub fn strip_northernmost_box(&self) -> Self {
        let mut parts = self.parts.clone();
        if let Some(last) = parts.last_mut() {
            *last -= 1;
            if *last == 0 {
                parts.pop();
            }
        }
        IntegerPartition { parts }
    }

    /// Adds a box at the end of 0-based French `row`, if the result is a
    /// partition. `row == len()` starts a new top row.
    pub fn with_box_in_row(&self, row: usize) -> Option<Self> {
        let mut parts = self.parts.clone();
        if row < parts.len() {
            parts[row] += 1;
        } else if row == parts.len() {
            parts.push(1);
        } else {
            return None;
        }
        IntegerPartition::new(parts).ok()
    }

    /// `other = self + one box`: returns the 0-based (row, col) of that box.
    pub fn added_box(&self, other: &IntegerPartition) -> Option<(usize, usize)> {
        if other.size() != self.size() + 1 || other.len() < self.len() {
            return None;
        }
        let mut found = None;
        for r in 0..other.len() {
            let a = self.parts.get(r).copied().unwrap_or(0);
            let b = other.parts[r];
            match b.checked_sub(a) {
                Some(0) => {}
                Some(1) if found.is_none() => found = Some((r, b - 1)),
                _ => return None,
            }
        }
        found
    }

    /// Whether `other` is `self` with one box removed.
    pub fn covers(&self, other: &IntegerPartition) -> bool {
        other.added_box(self).is_some()
    }

    /// All partitions of `m` in the derived order.
    pub fn partitions_of(m: usize) -> Vec<IntegerPartition> {
        fn rec(rest: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<IntegerPartition>) {
            if rest == 0 {
                out.push(IntegerPartition { parts: acc.clone() });
                return;
            }
            for next in (1..=rest.min(max)).rev() {
                acc.push(next);
                rec(rest - next, next, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        rec(m, m.max(1), &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl PartialOrd for IntegerPartition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IntegerPartition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.size(), &self.parts).cmp(&(other.size(), &other.parts))
    }
}

impl fmt::Debug for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A standard Young tableau in French convention; `rows[0]` is the bottom
/// row, labels are `1..=n` with strictly increasing rows and columns.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StandardYoungTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardYoungTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, YoungError> {
        let t = StandardYoungTableau { rows };
        let n = t.size();
        let mut seen = vec![false; n + 1];
        for (r, row) in t.rows.iter().enumerate() {
            if r + 1 < t.rows.len() && t.rows[r + 1].len() > row.len() {
                return Err(YoungError::InvalidTableau);
            }
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v > n || seen[v] {
                    return Err(YoungError::InvalidTableau);
                }
                seen[v] = true;
                if c > 0 && row[c - 1] >= v {
                    return Err(YoungError::InvalidTableau);
                }
                if r > 0 && t.rows[r - 1][c] >= v {
                    return Err(YoungError::InvalidTableau);
                }
            }
        }
        Ok(t)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> IntegerPartition {
        IntegerPartition::new(self.rows.iter().map(Vec::len).collect())
            .expect("tableau rows weakly decrease")
    }

    /// 0-based (row, col) of a label.
    pub fn position_of(&self, label: usize) -> Option<(usize, usize)> {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&v| v == label) {
                return Some((r, c));
            }
        }
        None
    }
}

impl fmt::Debug for StandardYoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SYT{:?}", self.rows)
    }
}

/// All standard Young tableaux of `shape`, sorted by Young's first-letter
/// order (first letter of disagreement in the higher French row first).
pub fn enumerate_syt(shape: &IntegerPartition) -> Vec<StandardYoungTableau> {
    fn rec(
        shape: &[usize],
        fill: &mut Vec<Vec<usize>>,
        next: usize,
        total: usize,
        out: &mut Vec<StandardYoungTableau>,
    ) {
        if next > total {
            out.push(StandardYoungTableau {
                rows: fill.clone(),
            });
            return;
        }
        for r in 0..shape.len() {
            let len = fill[r].len();
            if len < shape[r] && (r == 0 || fill[r - 1].len() > len) {
                fill[r].push(next);
                rec(shape, fill, next + 1, total, out);
                fill[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut fill = vec![Vec::new(); shape.len()];
    rec(shape.parts(), &mut fill, 1, shape.size(), &mut out);
    out.sort_by(yflo_cmp);
    out
}

/// Young's first-letter order comparison for same-shape tableaux.
fn yflo_cmp(a: &StandardYoungTableau, b: &StandardYoungTableau) -> std::cmp::Ordering {
    for label in 1..=a.size() {
        let (ra, _) = a.position_of(label).expect("standard labels");
        let (rb, _) = b.position_of(label).expect("standard labels");
        if ra != rb {
            // Higher French row first.
            return rb.cmp(&ra);
        }
    }
    std::cmp::Ordering::Equal
}

/// The permutation with `t1 = sigma · t2`, acting on labels positionwise.
pub fn sigma_between(
    t1: &StandardYoungTableau,
    t2: &StandardYoungTableau,
) -> Result<Permutation, YoungError> {
    if t1.shape() != t2.shape() {
        return Err(YoungError::InvalidTableau);
    }
    let mut line = vec![0usize; t1.size()];
    for (r, row) in t2.rows.iter().enumerate() {
        for (c, &from) in row.iter().enumerate() {
            line[from - 1] = t1.rows[r][c];
        }
    }
    Permutation::from_one_line(&line).ok_or(YoungError::InvalidTableau)
}

/// `sigma` between the `i`-th and `j`-th tableaux (1-based first-letter-order
/// indices) of a shape.
pub fn sigma(shape: &IntegerPartition, i: usize, j: usize) -> Result<Permutation, YoungError> {
    let ts = enumerate_syt(shape);
    let pick = |x: usize| {
        ts.get(x.wrapping_sub(1)).ok_or(YoungError::IndexError {
            index: x,
            count: ts.len(),
        })
    };
    sigma_between(pick(i)?, pick(j)?)
}

/// An element of the group algebra `Q S_k`.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    degree: usize,
    terms: BTreeMap<Permutation, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero(k: usize) -> Self {
        GroupAlgebraElement {
            degree: k,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(k: usize) -> Self {
        Self::from_permutation(Permutation::identity(k), rat(1, 1))
    }

    pub fn from_permutation(p: Permutation, c: Rational) -> Self {
        let degree = p.degree();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(p, c);
        }
        GroupAlgebraElement { degree, terms }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, Rational> {
        &self.terms
    }

    pub fn coeff(&self, p: &Permutation) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, p: Permutation, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&p) {
            Some(old) => {
                let sum = &*old + &c;
                if sum.is_zero() {
                    self.terms.remove(&p);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.terms.insert(p, c);
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&rat(-1, 1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        GroupAlgebraElement {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(p, x)| (p.clone(), x * c))
                .collect(),
        }
    }

    /// Group-algebra product; in each term of `x · y` the permutation from
    /// `y` acts first.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.degree);
        for (u, cu) in &self.terms {
            for (v, cv) in &rhs.terms {
                out.add_term(u.compose(v), cu * cv);
            }
        }
        out
    }

    /// Coefficient-faithful image in the partition algebra: each permutation
    /// becomes its diagram `{{i, p(i)'}}`.
    pub fn to_algebra_element<S: crate::scalar::Scalar>(&self) -> AlgebraElement<S> {
        let mut out = AlgebraElement::zero(self.degree);
        for (p, c) in &self.terms {
            let term = AlgebraElement::<S>::from_permutation(p).scale(&S::from_rational(c));
            out = out.add(&term).expect("orders agree");
        }
        out
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})*{}", crate::arith::format_rational(c), p)?;
        }
        Ok(())
    }
}

/// The row group of a tableau: all permutations preserving each row setwise.
pub fn row_group(t: &StandardYoungTableau) -> Vec<Permutation> {
    group_from_orbits(t.size(), t.rows())
}

/// The column group of a tableau.
pub fn column_group(t: &StandardYoungTableau) -> Vec<Permutation> {
    let cols: Vec<Vec<usize>> = (0..t.rows().first().map_or(0, Vec::len))
        .map(|c| {
            t.rows()
                .iter()
                .filter_map(|row| row.get(c).copied())
                .collect()
        })
        .collect();
    group_from_orbits(t.size(), &cols)
}

/// All permutations of `1..=n` that permute each listed label set within
/// itself.
fn group_from_orbits(n: usize, orbits: &[Vec<usize>]) -> Vec<Permutation> {
    let mut perms = vec![Permutation::identity(n)];
    for orbit in orbits {
        if orbit.len() < 2 {
            continue;
        }
        let arrangements = permutations_of(orbit);
        let mut next = Vec::with_capacity(perms.len() * arrangements.len());
        for base in &perms {
            for arr in &arrangements {
                let mut line: Vec<usize> = (1..=n).collect();
                for (i, &src) in orbit.iter().enumerate() {
                    line[src - 1] = arr[i];
                }
                let local = Permutation::from_one_line(&line).expect("orbit rearrangement");
                next.push(local.compose(base));
            }
        }
        perms = next;
    }
    perms
}

fn permutations_of(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations_of(&rest) {
            tail.insert(0, x);
            out.push(tail);
        }
    }
    out
}

/// The row symmetrizer `P(T)` and signed column symmetrizer `N(T)`.
pub fn symmetrizers(t: &StandardYoungTableau) -> (GroupAlgebraElement, GroupAlgebraElement) {
    let k = t.size();
    let mut p = GroupAlgebraElement::zero(k);
    for a in row_group(t) {
        p = p.add(&GroupAlgebraElement::from_permutation(a, rat(1, 1)));
    }
    let mut n = GroupAlgebraElement::zero(k);
    for b in column_group(t) {
        let s = rat(b.sign() as i64, 1);
        n = n.add(&GroupAlgebraElement::from_permutation(b, s));
    }
    (p, n)
}

fn factorial(k: usize) -> i64 {
    (1..=k as i64).product()
}

/// Young's idempotent `gamma_i = (f / k!) N(S_i) P(S_i)` for the `i`-th
/// (1-based) tableau of `shape` in first-letter order.
pub fn gamma(shape: &IntegerPartition, i: usize) -> Result<GroupAlgebraElement, YoungError> {
    let ts = enumerate_syt(shape);
    let t = ts.get(i.wrapping_sub(1)).ok_or(YoungError::IndexError {
        index: i,
        count: ts.len(),
    })?;
    let k = shape.size();
    let (p, n) = symmetrizers(t);
    Ok(n.mul(&p).scale(&rat(ts.len() as i64, factorial(k))))
}

/// Young's matrix unit
/// `s_ij = sigma_ij gamma_j (1 - gamma_{j+1}) ··· (1 - gamma_f)`.
///
/// Over all shapes of `k` and all valid `(i, j)` these form a matrix-unit
/// basis of `Q S_k`.
pub fn young_unit(
    shape: &IntegerPartition,
    i: usize,
    j: usize,
) -> Result<GroupAlgebraElement, YoungError> {
    let f = enumerate_syt(shape).len();
    let check = |x: usize| {
        (1..=f)
            .contains(&x)
            .then_some(())
            .ok_or(YoungError::IndexError { index: x, count: f })
    };
    check(i)?;
    check(j)?;
    let k = shape.size();
    let sig = GroupAlgebraElement::from_permutation(sigma(shape, i, j)?, rat(1, 1));
    let mut acc = sig.mul(&gamma(shape, j)?);
    for t in j + 1..=f {
        let one = GroupAlgebraElement::one(k);
        acc = acc.mul(&one.sub(&gamma(shape, t)?));
    }
    Ok(acc)
}

/// The shapes of `k` in the partition order used throughout.
pub fn shapes_of(k: usize) -> Vec<IntegerPartition> {
    IntegerPartition::partitions_of(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[usize]) -> IntegerPartition {
        IntegerPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partition_basics() {
        assert!(IntegerPartition::new(vec![1, 2]).is_err());
        assert!(IntegerPartition::new(vec![2, 0]).is_err());
        assert_eq!(part(&[2, 1]).size(), 3);
        assert_eq!(part(&[2, 2]).strip_northernmost_box(), part(&[2, 1]));
        assert_eq!(part(&[1]).strip_northernmost_box(), IntegerPartition::empty());
        assert_eq!(part(&[2, 1]).added_box(&part(&[2, 2])), Some((1, 1)));
        assert_eq!(part(&[2, 1]).added_box(&part(&[2, 1, 1])), Some((2, 0)));
        assert_eq!(part(&[2, 1]).added_box(&part(&[3, 2])), None);
        assert_eq!(
            IntegerPartition::partitions_of(3),
            vec![part(&[1, 1, 1]), part(&[2, 1]), part(&[3])]
        );
    }

    #[test]
    fn syt_counts_and_first_letter_order() {
        assert_eq!(enumerate_syt(&part(&[3])).len(), 1);
        assert_eq!(enumerate_syt(&part(&[2, 2])).len(), 2);
        let ts = enumerate_syt(&part(&[2, 1]));
        assert_eq!(ts.len(), 2);
        // First tableau carries the disagreement letter 2 in the higher row.
        assert_eq!(ts[0].rows(), &[vec![1, 3], vec![2]]);
        assert_eq!(ts[1].rows(), &[vec![1, 2], vec![3]]);
        let hook = enumerate_syt(&part(&[3, 1]));
        assert_eq!(
            hook.iter().map(|t| t.rows()[1][0]).collect::<Vec<_>>(),
            vec![2, 3, 4]
        );
    }

    #[test]
    fn sigma_relations() {
        let lam = part(&[2, 1]);
        assert_eq!(sigma(&lam, 1, 1).unwrap(), Permutation::identity(3));
        let s12 = sigma(&lam, 1, 2).unwrap();
        assert_eq!(s12, Permutation::transposition(3, 2, 3));
        assert_eq!(
            s12.compose(&sigma(&lam, 2, 1).unwrap()),
            Permutation::identity(3)
        );
        assert!(sigma(&lam, 1, 3).is_err());
    }

    #[test]
    fn symmetrizer_shapes() {
        let single = StandardYoungTableau::new(vec![vec![1]]).unwrap();
        let (p, n) = symmetrizers(&single);
        assert_eq!(p, GroupAlgebraElement::one(1));
        assert_eq!(n, GroupAlgebraElement::one(1));
        // Shape (2): row group is S2, column group trivial.
        let row2 = StandardYoungTableau::new(vec![vec![1, 2]]).unwrap();
        let (p, n) = symmetrizers(&row2);
        assert_eq!(p.terms().len(), 2);
        assert_eq!(n, GroupAlgebraElement::one(2));
        // Shape (1,1): transposed.
        let col2 = StandardYoungTableau::new(vec![vec![1], vec![2]]).unwrap();
        let (p, n) = symmetrizers(&col2);
        assert_eq!(p, GroupAlgebraElement::one(2));
        assert_eq!(
            n.coeff(&Permutation::transposition(2, 1, 2)),
            rat(-1, 1)
        );
    }

    #[test]
    fn gamma_full_symmetrizer_and_idempotency() {
        // gamma_1 for a single row is the averaged sum of all permutations.
        let g = gamma(&part(&[3]), 1).unwrap();
        assert_eq!(g.terms().len(), 6);
        for (_, c) in g.terms() {
            assert_eq!(c, &rat(1, 6));
        }
        // Single column: signed average.
        let g = gamma(&part(&[1, 1, 1]), 1).unwrap();
        for (p, c) in g.terms() {
            assert_eq!(c, &rat(p.sign() as i64, 6));
        }
        // gamma is idempotent on (2,1).
        let g = gamma(&part(&[2, 1]), 1).unwrap();
        assert_eq!(g.mul(&g), g);
    }

    #[test]
    fn matrix_unit_axioms_small_degrees() {
        for k in 2..=4 {
            let mut units = Vec::new();
            for lam in shapes_of(k) {
                let f = enumerate_syt(&lam).len();
                for i in 1..=f {
                    for j in 1..=f {
                        units.push(((lam.clone(), i, j), young_unit(&lam, i, j).unwrap()));
                    }
                }
            }
            assert_eq!(units.len(), factorial(k) as usize);
            let mut diag_sum = GroupAlgebraElement::zero(k);
            for ((lam, i, j), u) in &units {
                if i == j {
                    diag_sum = diag_sum.add(u);
                }
                for ((mu, p, q), v) in &units {
                    let prod = u.mul(v);
                    if lam == mu && j == p {
                        assert_eq!(&prod, &units
                            .iter()
                            .find(|((l2, a, b), _)| l2 == lam && a == i && b == q)
                            .unwrap()
                            .1);
                    } else {
                        assert!(prod.is_zero(), "s[{lam},{i},{j}] * s[{mu},{p},{q}] != 0");
                    }
                }
            }
            assert_eq!(diag_sum, GroupAlgebraElement::one(k));
        }
    }
}
