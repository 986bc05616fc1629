//! The diagram-indexed monoid basis `{m_pi}` of `CA_k(n)` and its
//! combinatorial product rule.
//!
//! Every diagram `pi` is routed through the composite bijection
//! `pi -> (RSK_1(pi), RSK_2(pi)) -> (paths)` and mapped to a basis element
//! built from matrix units: the distinguished absorbing unit alone when the
//! pair is the absorbing pair, the identity (sum of all diagonal units) for
//! the pair attached to the identity diagram, and `E_0 + e_{P,Q}` otherwise,
//! with `E_0` the absorbing unit.
//!
//! The product of two basis elements is again a basis element, and the index
//! is computable without any algebra: `m_a m_b = m_b` when `a` is the
//! identity diagram (and symmetrically), `m_a m_b = m_absorbing` when
//! `RSK_2(a) != RSK_1(b)`, and otherwise
//! `m_a m_b = m_{RSK^{-1}(RSK_1(a), RSK_2(b))}`. Multiplication tables verify
//! this rule against the actual algebra product entry by entry and fail hard
//! on any mismatch.
//!
//! For `k >= 2` the absorbing component is the one-dimensional block at the
//! single-column partition `(1^k)`, reached by the reverse diagram
//! `{{1,k'},..,{k,1'}}`. At `k = 1` the single-column and single-row
//! components coincide, and the absorbing role falls to the empty-partition
//! block (reached by the all-singletons diagram).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::algebra::{AlgebraElement, AlgebraError};
use crate::bijections::{
    bh_forward, bh_to_hr, diagram_rsk, diagram_rsk_inverse, BijectionError, SetPartitionTableau,
};
use crate::bratteli::VacillatingTableau;
use crate::diagram::{enumerate_diagrams_with_limit, DiagramError, PartitionDiagram};
use crate::scalar::Scalar;
use crate::units::{MatrixUnitSystem, UnitError};
use crate::young::IntegerPartition;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MonoidError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Bijection(#[from] BijectionError),
    #[error(transparent)]
    Unit(#[from] UnitError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("paths end at different partitions: {0} vs {1}")]
    InvalidPair(IntegerPartition, IntegerPartition),
    #[error(
        "combinatorial rule disagrees with the algebra product at ({a}, {b}): rule gives {rule}"
    )]
    RuleMismatch {
        a: PartitionDiagram,
        b: PartitionDiagram,
        rule: PartitionDiagram,
    },
}

/// The path indexing the absorbing component: the strict single-column path
/// to `(1^k)` for `k >= 2`, the all-empty path for `k = 1`.
pub fn absorbing_path(k: usize) -> VacillatingTableau {
    let entries = (0..=2 * k)
        .map(|t| {
            if k == 1 {
                IntegerPartition::empty()
            } else {
                IntegerPartition::single_column(t / 2)
            }
        })
        .collect();
    VacillatingTableau::new(entries).expect("column path is valid")
}

/// The path indexing the identity component: the strict single-row path to
/// `(k)`.
pub fn identity_path(k: usize) -> VacillatingTableau {
    let entries = (0..=2 * k)
        .map(|t| IntegerPartition::single_row(t / 2))
        .collect();
    VacillatingTableau::new(entries).expect("row path is valid")
}

/// The basis element attached to a pair of paths ending at the same vertex.
pub fn m_unit<S: Scalar>(
    p: &VacillatingTableau,
    q: &VacillatingTableau,
    system: &MatrixUnitSystem<S>,
) -> Result<AlgebraElement<S>, MonoidError> {
    if p.final_partition() != q.final_partition() {
        return Err(MonoidError::InvalidPair(
            p.final_partition().clone(),
            q.final_partition().clone(),
        ));
    }
    let k = system.order();
    let absorbing = absorbing_path(k);
    if p == q && *p == absorbing {
        return Ok(system.unit(&absorbing, &absorbing)?.clone());
    }
    if p == q && *p == identity_path(k) {
        return Ok(system.diagonal_sum());
    }
    let e0 = system.unit(&absorbing, &absorbing)?;
    Ok(e0.add(system.unit(p, q)?)?)
}

/// The pair of paths assigned to a diagram by the composite bijection
/// (RSK, then the insertion bijection, then stripping the padding).
pub fn composite_pair(
    d: &PartitionDiagram,
) -> Result<(VacillatingTableau, VacillatingTableau), MonoidError> {
    let (t1, t2) = diagram_rsk(d);
    let route = |t: &SetPartitionTableau| -> Result<VacillatingTableau, MonoidError> {
        Ok(bh_to_hr(&bh_forward(t)?)?)
    };
    Ok((route(&t1)?, route(&t2)?))
}

/// The monoid basis element of a diagram.
pub fn m_of_diagram<S: Scalar>(
    d: &PartitionDiagram,
    system: &MatrixUnitSystem<S>,
) -> Result<AlgebraElement<S>, MonoidError> {
    let (p, q) = composite_pair(d)?;
    m_unit(&p, &q, system)
}

/// The combinatorial product rule on diagram indices.
pub fn rule_product(
    a: &PartitionDiagram,
    b: &PartitionDiagram,
) -> Result<PartitionDiagram, MonoidError> {
    if a.order() != b.order() {
        return Err(MonoidError::Diagram(DiagramError::OrderMismatch(
            a.order(),
            b.order(),
        )));
    }
    let id = PartitionDiagram::identity(a.order());
    if *a == id {
        return Ok(b.clone());
    }
    if *b == id {
        return Ok(a.clone());
    }
    let (a1, a2) = diagram_rsk(a);
    let (b1, b2) = diagram_rsk(b);
    if a2 != b1 {
        return Ok(PartitionDiagram::reverse(a.order()));
    }
    Ok(diagram_rsk_inverse(&a1, &b2)?)
}

/// The monoid basis, keyed by diagrams in enumeration order.
pub struct MonoidBasis<S: Scalar> {
    order: usize,
    elements: BTreeMap<PartitionDiagram, AlgebraElement<S>>,
    identity_key: PartitionDiagram,
    absorbing_key: PartitionDiagram,
}

impl<S: Scalar> MonoidBasis<S> {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> &BTreeMap<PartitionDiagram, AlgebraElement<S>> {
        &self.elements
    }

    pub fn element(&self, d: &PartitionDiagram) -> Option<&AlgebraElement<S>> {
        self.elements.get(d)
    }

    /// The diagram indexing the monoid identity.
    pub fn identity_key(&self) -> &PartitionDiagram {
        &self.identity_key
    }

    /// The diagram indexing the absorbing element: the reverse diagram for
    /// `k >= 2`, the all-singletons diagram at `k = 1`.
    pub fn absorbing_key(&self) -> &PartitionDiagram {
        &self.absorbing_key
    }
}

/// Builds all `Bell(2k)` monoid basis elements from a matrix-unit system.
pub fn build_monoid_basis<S: Scalar>(
    system: &MatrixUnitSystem<S>,
    limit: usize,
) -> Result<MonoidBasis<S>, MonoidError> {
    let k = system.order();
    let mut elements = BTreeMap::new();
    for d in enumerate_diagrams_with_limit(k, limit)? {
        let m = m_of_diagram(&d, system)?;
        elements.insert(d, m);
    }
    let absorbing_key = if k == 1 {
        PartitionDiagram::new(1, vec![vec![1], vec![-1]])?
    } else {
        PartitionDiagram::reverse(k)
    };
    Ok(MonoidBasis {
        order: k,
        elements,
        identity_key: PartitionDiagram::identity(k),
        absorbing_key,
    })
}

/// The full multiplication table on diagram indices, verified entry by entry
/// against the algebra product of the corresponding basis elements.
pub struct MultiplicationTable {
    diagrams: Vec<PartitionDiagram>,
    /// `entries[i][j]` is the index into `diagrams` of the product of the
    /// `i`-th and `j`-th basis elements.
    entries: Vec<Vec<usize>>,
}

impl MultiplicationTable {
    /// Assembles a table from already-verified entries (crate-internal: the
    /// verification path owns the proof obligation).
    pub(crate) fn from_verified_entries(
        diagrams: Vec<PartitionDiagram>,
        entries: Vec<Vec<usize>>,
    ) -> Self {
        MultiplicationTable { diagrams, entries }
    }

    pub fn diagrams(&self) -> &[PartitionDiagram] {
        &self.diagrams
    }

    pub fn entries(&self) -> &[Vec<usize>] {
        &self.entries
    }

    /// CSV with a header row of 1-based diagram indices.
    pub fn to_csv(&self) -> String {
        let n = self.diagrams.len();
        let mut out = String::new();
        out.push_str("\"*\"");
        for j in 1..=n {
            let _ = write!(out, ",{j}");
        }
        out.push('\n');
        for (i, row) in self.entries.iter().enumerate() {
            let _ = write!(out, "{}", i + 1);
            for &e in row {
                let _ = write!(out, ",{}", e + 1);
            }
            out.push('\n');
        }
        out
    }
}

/// Computes the table by the combinatorial rule and checks every entry
/// against the algebra; any disagreement is fatal.
pub fn multiplication_table<S: Scalar>(
    system: &MatrixUnitSystem<S>,
    limit: usize,
) -> Result<MultiplicationTable, MonoidError> {
    let basis = build_monoid_basis(system, limit)?;
    multiplication_table_with_basis(system, &basis, limit)
}

/// As [`multiplication_table`], reusing an already-built basis.
pub fn multiplication_table_with_basis<S: Scalar>(
    system: &MatrixUnitSystem<S>,
    basis: &MonoidBasis<S>,
    limit: usize,
) -> Result<MultiplicationTable, MonoidError> {
    let k = system.order();
    let diagrams = enumerate_diagrams_with_limit(k, limit)?;
    let index: BTreeMap<&PartitionDiagram, usize> =
        diagrams.iter().enumerate().map(|(i, d)| (d, i)).collect();
    let n = system.parameter();
    let mut entries = Vec::with_capacity(diagrams.len());
    for a in &diagrams {
        let ma = &basis.elements()[a];
        let mut row = Vec::with_capacity(diagrams.len());
        for b in &diagrams {
            let c = rule_product(a, b)?;
            let algebraic = ma.multiply(&basis.elements()[b], n)?;
            if algebraic != basis.elements()[&c] {
                return Err(MonoidError::RuleMismatch {
                    a: a.clone(),
                    b: b.clone(),
                    rule: c,
                });
            }
            row.push(index[&c]);
        }
        entries.push(row);
    }
    Ok(MultiplicationTable { diagrams, entries })
}

/// The transition matrix from the monoid basis to the diagram basis: row `i`
/// holds the diagram-basis coefficients of the basis element of the `i`-th
/// diagram.
pub struct TransitionMatrix<S: Scalar> {
    diagrams: Vec<PartitionDiagram>,
    rows: Vec<Vec<S>>,
}

impl<S: Scalar> TransitionMatrix<S> {
    pub fn diagrams(&self) -> &[PartitionDiagram] {
        &self.diagrams
    }

    pub fn rows(&self) -> &[Vec<S>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &S {
        &self.rows[i][j]
    }

    /// Determinant by fraction-light Gaussian elimination over the field.
    pub fn determinant(&self) -> S {
        let n = self.rows.len();
        let mut m: Vec<Vec<S>> = self.rows.clone();
        let mut det = S::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return S::zero();
            };
            if pivot != col {
                m.swap(pivot, col);
                det = det.neg();
            }
            let p = m[col][col].clone();
            det = det.mul(&p);
            let pinv = p.inv().expect("nonzero pivot");
            #[allow(clippy::needless_range_loop)]
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = m[r][col].mul(&pinv);
                for c in col..n {
                    let t = factor.mul(&m[col][c]);
                    m[r][c] = m[r][c].sub(&t);
                }
            }
        }
        det
    }

    /// CSV with scalar entries rendered by their display form.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                let _ = write!(out, "\"{c}\"");
            }
            out.push('\n');
        }
        out
    }
}

/// Expands every monoid basis element over the diagram basis.
pub fn transition_matrix<S: Scalar>(
    system: &MatrixUnitSystem<S>,
    limit: usize,
) -> Result<TransitionMatrix<S>, MonoidError> {
    let basis = build_monoid_basis(system, limit)?;
    let diagrams = enumerate_diagrams_with_limit(system.order(), limit)?;
    let rows = diagrams
        .iter()
        .map(|a| {
            let m = &basis.elements()[a];
            diagrams.iter().map(|b| m.coeff(b)).collect()
        })
        .collect();
    Ok(TransitionMatrix { diagrams, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::RationalFunction;
    use crate::diagram::enumerate_diagrams;
    use crate::units::build_system;
    use crate::DEFAULT_ORDER_LIMIT;

    type Rf = RationalFunction;

    fn sys(k: usize) -> MatrixUnitSystem<Rf> {
        build_system(k, Rf::variable(), DEFAULT_ORDER_LIMIT).unwrap()
    }

    #[test]
    fn identity_and_absorbing_elements_order_two() {
        let system = sys(2);
        let ds = enumerate_diagrams(2).unwrap();
        // m of the identity diagram is the algebra identity.
        let m_id = m_of_diagram(&ds[8], &system).unwrap();
        assert_eq!(m_id, AlgebraElement::one(2));
        // m of the reverse diagram is the single-column unit alone.
        let m_rev = m_of_diagram(&ds[6], &system).unwrap();
        let col = IntegerPartition::new(vec![1, 1]).unwrap();
        assert_eq!(&m_rev, &system.block(&col).unwrap().units[0][0]);
        // The generic case adds the absorbing unit to the indexed unit: for
        // the all-singletons diagram the pair is the diagonal bubble path.
        let bubble = VacillatingTableau::new(vec![
            IntegerPartition::empty(),
            IntegerPartition::empty(),
            IntegerPartition::new(vec![1]).unwrap(),
            IntegerPartition::empty(),
            IntegerPartition::empty(),
        ])
        .unwrap();
        let m_singles = m_of_diagram(&ds[14], &system).unwrap();
        let want = m_rev
            .add(system.unit(&bubble, &bubble).unwrap())
            .unwrap();
        assert_eq!(m_singles, want);
    }

    #[test]
    fn rule_product_worked_examples() {
        let ds = enumerate_diagrams(2).unwrap();
        assert_eq!(rule_product(&ds[1], &ds[9]).unwrap(), ds[0]);
        assert_eq!(rule_product(&ds[6], &ds[6]).unwrap(), ds[6]);
        for x in &ds {
            assert_eq!(&rule_product(&ds[8], x).unwrap(), x);
            assert_eq!(&rule_product(x, &ds[8]).unwrap(), x);
        }
        assert!(rule_product(&ds[0], &PartitionDiagram::identity(3)).is_err());
    }

    #[test]
    fn order_one_table_by_hand() {
        let system = sys(1);
        let table = multiplication_table(&system, DEFAULT_ORDER_LIMIT).unwrap();
        // Diagrams: [identity, all-singletons]; the non-identity diagram is
        // idempotent and absorbing.
        assert_eq!(table.entries(), &[vec![0, 1], vec![1, 1]]);
        let basis = build_monoid_basis(&system, DEFAULT_ORDER_LIMIT).unwrap();
        assert_eq!(
            basis.absorbing_key(),
            &PartitionDiagram::new(1, vec![vec![1], vec![-1]]).unwrap()
        );
    }

    #[test]
    fn order_two_table_verifies_against_algebra() {
        let system = sys(2);
        let table = multiplication_table(&system, DEFAULT_ORDER_LIMIT).unwrap();
        // Identity row reproduces the header; absorbing row is constant.
        assert_eq!(table.entries()[8], (0..15).collect::<Vec<_>>());
        assert!(table.entries()[6].iter().all(|&e| e == 6));
        // Spot checks against the worked products.
        assert_eq!(table.entries()[1][9], 0);
        assert_eq!(table.entries()[6][6], 6);
    }

    #[test]
    fn monoid_injectivity_and_transition_matrix_order_one() {
        let system = sys(1);
        let t = transition_matrix(&system, DEFAULT_ORDER_LIMIT).unwrap();
        assert_eq!(t.rows().len(), 2);
        let det = t.determinant();
        // det = 1/n: nonzero, poles only at 0.
        assert_eq!(det, Rf::from_integer_coeffs(&[1], &[0, 1]).unwrap());
    }

    #[test]
    fn mismatched_pair_rejected() {
        let system = sys(2);
        let p = absorbing_path(2);
        let q = identity_path(2);
        assert!(matches!(
            m_unit(&p, &q, &system),
            Err(MonoidError::InvalidPair(..))
        ));
    }
}
