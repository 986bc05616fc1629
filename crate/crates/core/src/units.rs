//! A recursive matrix-unit basis of the partition algebra `CA_k(n)`.
//!
//! The construction walks the tower `CA_{1/2} ⊂ CA_1 ⊂ CA_{3/2} ⊂ ··· ⊂ CA_k`
//! level by level. At each level the units are indexed by pairs of
//! vacillating tableaux ending at the same vertex:
//!
//! - blocks whose vertex `mu` satisfies `|mu| < level` are produced from the
//!   previous level through the sandwich
//!   `u_{P,Q} = e_{P-, T(P)} · p · e_{T(Q), Q-}` with `p` the level's
//!   contraction diagram and `T` the canonical companion path
//!   ([`crate::bratteli::t_map`]); each `u_{P,Q}` is a nonzero scalar
//!   multiple of a true matrix unit and is rescaled by the reference-tableau
//!   normalization below;
//! - the top blocks (`|mu|` equal to the level floor) are seeded from Young's
//!   symmetric-group matrix units: `e_{P,Q} = (1 - z) · s`, where `z` is the
//!   sum of all diagonal units of the lower blocks at the same level and `s`
//!   is the Young unit for the pair of standard tableaux identified with the
//!   strictly growing parts of `P` and `Q`.
//!
//! Normalization fixes the scalar freedom per block: diagonal quasi-units are
//! rescaled to idempotents (`u² = c·u` forces the scalar), and off-diagonal
//! units are derived from the first path `R0` of the block via
//! `f_P = e_{P,P} u_{P,R0} e_{R0,R0}`, `g_P = e_{R0,R0} u_{R0,P} e_{P,P}`,
//! `f_P g_P = c_P e_{P,P}`, `e_{P,R0} = f_P / c_P`, `e_{R0,P} = g_P`, and
//! `e_{P,Q} = e_{P,R0} e_{R0,Q}`. Diagonal units are independent of all of
//! these choices.
//!
//! Over `Q(n)` the result is the generic matrix-unit basis; over `Q` at a
//! fixed rational parameter it is the specialized one, valid whenever the
//! parameter avoids the finitely many degenerate values (failures surface as
//! [`UnitError::DegenerateParameter`]).

use std::collections::HashMap;

use crate::algebra::{AlgebraElement, Permutation};
use crate::bratteli::{enumerate_vt, t_map, vertices, vt_to_syt, BratteliError, Level, VacillatingTableau};
use crate::diagram::{enumerate_diagrams_with_limit, DiagramError, PartitionDiagram};
use crate::scalar::Scalar;
use crate::young::{enumerate_syt, shapes_of, young_unit, IntegerPartition, YoungError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum UnitError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Bratteli(#[from] BratteliError),
    #[error(transparent)]
    Young(#[from] YoungError),
    #[error("degenerate parameter while normalizing block {mu} at level {level}")]
    DegenerateParameter { level: Level, mu: IntegerPartition },
    #[error("construction order violated: {0}")]
    ConstructionOrder(String),
    #[error("invalid tableau pair: {0}")]
    InvalidPair(String),
}

/// The contraction element of a level: the diagram `p_l` for integer `l`,
/// the diagram `p_{j+1/2}` for level `j + 1/2`, at the ambient order.
pub fn p_element<S: Scalar>(level: Level, order: usize) -> Result<AlgebraElement<S>, UnitError> {
    let d = if level.is_integer() {
        PartitionDiagram::p_int(level.floor(), order)?
    } else {
        PartitionDiagram::p_half(level.floor(), order)?
    };
    Ok(AlgebraElement::from_diagram(d))
}

// ---- indexed diagram arithmetic (internal fast path) ----

/// Diagram table for one order: id assignment plus a memoized product table
/// `(id, id) -> (id, middle components)`. Dense for small orders, hashed
/// otherwise.
pub(crate) struct DiagCtx {
    order: usize,
    diagrams: Vec<PartitionDiagram>,
    index: HashMap<PartitionDiagram, u32>,
    dense: Option<Vec<Option<(u32, u8)>>>,
    sparse: HashMap<(u32, u32), (u32, u8)>,
}

impl DiagCtx {
    pub(crate) fn new(order: usize, limit: usize) -> Result<Self, DiagramError> {
        let diagrams = enumerate_diagrams_with_limit(order, limit)?;
        let index = diagrams
            .iter()
            .enumerate()
            .map(|(i, d)| (d.clone(), i as u32))
            .collect();
        let n = diagrams.len();
        let dense = (n * n <= 1 << 20).then(|| vec![None; n * n]);
        Ok(DiagCtx {
            order,
            diagrams,
            index,
            dense,
            sparse: HashMap::new(),
        })
    }

    pub(crate) fn order(&self) -> usize {
        self.order
    }

    pub(crate) fn len(&self) -> usize {
        self.diagrams.len()
    }

    pub(crate) fn diagram(&self, id: u32) -> &PartitionDiagram {
        &self.diagrams[id as usize]
    }

    pub(crate) fn id(&self, d: &PartitionDiagram) -> u32 {
        self.index[d]
    }

    pub(crate) fn product(&mut self, a: u32, b: u32) -> (u32, u8) {
        let n = self.diagrams.len();
        if let Some(dense) = &self.dense {
            if let Some(hit) = dense[a as usize * n + b as usize] {
                return hit;
            }
        } else if let Some(&hit) = self.sparse.get(&(a, b)) {
            return hit;
        }
        let r = self.diagrams[a as usize]
            .compose(&self.diagrams[b as usize])
            .expect("orders agree inside one table");
        let val = (self.index[&r.diagram], r.middle_components as u8);
        if let Some(dense) = &mut self.dense {
            dense[a as usize * n + b as usize] = Some(val);
        } else {
            self.sparse.insert((a, b), val);
        }
        val
    }

    /// Precomputes every product (dense tables only), enabling
    /// [`DiagCtx::product_cached`] from shared references.
    pub(crate) fn fill_all(&mut self) {
        let n = self.diagrams.len() as u32;
        for a in 0..n {
            for b in 0..n {
                self.product(a, b);
            }
        }
    }

    pub(crate) fn product_cached(&self, a: u32, b: u32) -> (u32, u8) {
        let n = self.diagrams.len();
        self.dense.as_ref().expect("fill_all on a dense table")[a as usize * n + b as usize]
            .expect("table prefilled")
    }
}

/// Sorted-by-id sparse vector over a [`DiagCtx`].
pub(crate) type Sparse<S> = Vec<(u32, S)>;

pub(crate) fn sp_mul<S: Scalar>(
    ctx: &mut DiagCtx,
    a: &Sparse<S>,
    b: &Sparse<S>,
    npows: &[S],
) -> Sparse<S> {
    let mut acc: Vec<Option<S>> = vec![None; ctx.len()];
    for (ia, ca) in a {
        for (ib, cb) in b {
            let (ir, pow) = ctx.product(*ia, *ib);
            let term = ca.mul(cb).mul(&npows[pow as usize]);
            let slot = &mut acc[ir as usize];
            *slot = Some(match slot.take() {
                None => term,
                Some(old) => old.add(&term),
            });
        }
    }
    acc.into_iter()
        .enumerate()
        .filter_map(|(i, c)| {
            c.and_then(|c| (!c.is_zero()).then_some((i as u32, c)))
        })
        .collect()
}

pub(crate) fn sp_add<S: Scalar>(a: &Sparse<S>, b: &Sparse<S>) -> Sparse<S> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some((ia, ca)), Some((ib, cb))) if ia == ib => {
                let c = ca.add(cb);
                if !c.is_zero() {
                    out.push((*ia, c));
                }
                i += 1;
                j += 1;
            }
            (Some((ia, ca)), Some((ib, _))) if ia < ib => {
                out.push((*ia, ca.clone()));
                i += 1;
            }
            (Some(_), Some((ib, cb))) => {
                out.push((*ib, cb.clone()));
                j += 1;
            }
            (Some((ia, ca)), None) => {
                out.push((*ia, ca.clone()));
                i += 1;
            }
            (None, Some((ib, cb))) => {
                out.push((*ib, cb.clone()));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

pub(crate) fn sp_neg<S: Scalar>(a: &Sparse<S>) -> Sparse<S> {
    a.iter().map(|(i, c)| (*i, c.neg())).collect()
}

pub(crate) fn sp_sub<S: Scalar>(a: &Sparse<S>, b: &Sparse<S>) -> Sparse<S> {
    sp_add(a, &sp_neg(b))
}

pub(crate) fn sp_scale<S: Scalar>(a: &Sparse<S>, c: &S) -> Sparse<S> {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|(i, x)| (*i, x.mul(c))).collect()
}

/// The scalar `c` with `a = c · b`, if one exists; `None` covers both "not
/// proportional" and "b is zero while a is not".
pub(crate) fn sp_proportionality<S: Scalar>(a: &Sparse<S>, b: &Sparse<S>) -> Option<S> {
    if a.is_empty() {
        return Some(S::zero());
    }
    if b.is_empty() || a.len() != b.len() {
        return None;
    }
    let mut c: Option<S> = None;
    for ((ia, ca), (ib, cb)) in a.iter().zip(b.iter()) {
        if ia != ib {
            return None;
        }
        let ratio = ca.mul(&cb.inv()?);
        match &c {
            None => c = Some(ratio),
            Some(prev) if *prev == ratio => {}
            Some(_) => return None,
        }
    }
    c
}

// ---- level-by-level construction ----

struct BuildBlock<S: Scalar> {
    mu: IntegerPartition,
    paths: Vec<VacillatingTableau>,
    path_idx: HashMap<VacillatingTableau, usize>,
    units: Vec<Vec<Sparse<S>>>,
}

impl<S: Scalar> BuildBlock<S> {
    fn new(mu: IntegerPartition, paths: Vec<VacillatingTableau>) -> Self {
        let path_idx = paths
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        BuildBlock {
            mu,
            paths,
            path_idx,
            units: Vec::new(),
        }
    }
}

/// A matrix-unit basis of `CA_k(n)`: for every vertex `mu` at level `k` and
/// every ordered pair of paths ending at `mu`, one basis element, satisfying
/// `e_{P,Q} e_{R,S} = [Q = R] e_{P,S}` and summing (over the diagonal) to the
/// identity.
pub struct MatrixUnitSystem<S: Scalar> {
    k: usize,
    n: S,
    blocks: Vec<UnitBlock<S>>,
}

/// One simple block of the system: the vertex, its paths in enumeration
/// order, and the full `m x m` table of units.
pub struct UnitBlock<S: Scalar> {
    pub mu: IntegerPartition,
    pub paths: Vec<VacillatingTableau>,
    pub units: Vec<Vec<AlgebraElement<S>>>,
}

impl<S: Scalar> MatrixUnitSystem<S> {
    pub fn order(&self) -> usize {
        self.k
    }

    pub fn parameter(&self) -> &S {
        &self.n
    }

    pub fn blocks(&self) -> &[UnitBlock<S>] {
        &self.blocks
    }

    pub fn block(&self, mu: &IntegerPartition) -> Option<&UnitBlock<S>> {
        self.blocks.iter().find(|b| &b.mu == mu)
    }

    /// Block sizes per vertex, in vertex order.
    pub fn summary(&self) -> Vec<(IntegerPartition, usize)> {
        self.blocks
            .iter()
            .map(|b| (b.mu.clone(), b.paths.len()))
            .collect()
    }

    pub fn total_units(&self) -> usize {
        self.blocks.iter().map(|b| b.paths.len() * b.paths.len()).sum()
    }

    /// The unit indexed by a pair of paths ending at the same vertex of
    /// level `k`.
    pub fn unit(
        &self,
        p: &VacillatingTableau,
        q: &VacillatingTableau,
    ) -> Result<&AlgebraElement<S>, UnitError> {
        if p.final_partition() != q.final_partition() {
            return Err(UnitError::InvalidPair(format!(
                "paths end at {} and {}",
                p.final_partition(),
                q.final_partition()
            )));
        }
        let block = self
            .block(p.final_partition())
            .ok_or_else(|| UnitError::InvalidPair(format!("no block {}", p.final_partition())))?;
        let find = |x: &VacillatingTableau| {
            block
                .paths
                .iter()
                .position(|y| y == x)
                .ok_or_else(|| UnitError::InvalidPair(format!("unknown path {x}")))
        };
        Ok(&block.units[find(p)?][find(q)?])
    }

    /// Sum of all diagonal units; equals the identity of `CA_k(n)`.
    pub fn diagonal_sum(&self) -> AlgebraElement<S> {
        let mut acc = AlgebraElement::zero(self.k);
        for b in &self.blocks {
            for i in 0..b.paths.len() {
                acc = acc.add(&b.units[i][i]).expect("orders agree");
            }
        }
        acc
    }
}

/// Builds the full matrix-unit system of `CA_k(n)` with the parameter given
/// as a scalar (the indeterminate for symbolic runs, a rational value for
/// specialized runs).
pub fn build_system<S: Scalar>(
    k: usize,
    n: S,
    limit: usize,
) -> Result<MatrixUnitSystem<S>, UnitError> {
    if k == 0 || k > limit {
        return Err(UnitError::Diagram(DiagramError::ResourceLimit {
            got: k,
            limit,
        }));
    }
    let mut ctx = DiagCtx::new(1, limit)?;

    // Level 1/2: the one-dimensional algebra spanned by the identity.
    let half_path = VacillatingTableau::new(vec![
        IntegerPartition::empty(),
        IntegerPartition::empty(),
    ])
    .expect("trivial path");
    let mut seed = BuildBlock::new(IntegerPartition::empty(), vec![half_path]);
    seed.units = vec![vec![vec![(ctx.id(&PartitionDiagram::identity(1)), S::one())]]];
    let mut state = vec![seed];

    for twice in 2..=2 * k {
        let level = Level::from_twice(twice);
        if !level.is_integer() {
            // Half level: the ambient order grows by one; embed the previous
            // state by appending the identity strand on the new column.
            let new_order = ctx.order() + 1;
            let new_ctx = DiagCtx::new(new_order, limit)?;
            let embed: Vec<u32> = (0..ctx.len() as u32)
                .map(|id| {
                    let old = ctx.diagram(id);
                    let mut blocks: Vec<Vec<i32>> = old.blocks().to_vec();
                    blocks.push(vec![new_order as i32, -(new_order as i32)]);
                    new_ctx.id(&PartitionDiagram::new(new_order, blocks).expect("embed"))
                })
                .collect();
            for block in &mut state {
                for row in &mut block.units {
                    for u in row.iter_mut() {
                        *u = u
                            .iter()
                            .map(|(id, c)| (embed[*id as usize], c.clone()))
                            .collect();
                        u.sort_by_key(|(id, _)| *id);
                    }
                }
            }
            ctx = new_ctx;
        }

        let mut npows = vec![S::one()];
        for _ in 0..ctx.order() {
            npows.push(npows.last().unwrap().mul(&n));
        }
        let p_diag: AlgebraElement<S> = p_element(level, ctx.order())?;
        let p_sparse: Sparse<S> = vec![(
            ctx.id(p_diag.terms().keys().next().expect("single diagram")),
            S::one(),
        )];

        let mut next: Vec<BuildBlock<S>> = Vec::new();
        for mu in vertices(level) {
            if mu.size() + 1 > level.floor() {
                continue;
            }
            next.push(recurse_block(
                level, mu, &state, &mut ctx, &p_sparse, &npows,
            )?);
        }

        // z sums the diagonal units just rebuilt at this level; the new top
        // blocks live under the complementary central idempotent 1 - z.
        let mut z: Sparse<S> = Vec::new();
        for block in &next {
            for i in 0..block.paths.len() {
                z = sp_add(&z, &block.units[i][i]);
            }
        }
        let one: Sparse<S> = vec![(ctx.id(&PartitionDiagram::identity(ctx.order())), S::one())];
        let one_minus_z = sp_sub(&one, &z);

        for lam in shapes_of(level.floor()) {
            next.push(seed_block(
                level,
                lam,
                &one_minus_z,
                &mut ctx,
                &npows,
            )?);
        }
        state = next;
    }

    let blocks = state
        .into_iter()
        .map(|b| {
            let units = b
                .units
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|u| {
                            AlgebraElement::from_terms(
                                k,
                                u.iter().map(|(id, c)| (ctx.diagram(*id).clone(), c.clone())),
                            )
                            .expect("orders agree")
                        })
                        .collect()
                })
                .collect();
            UnitBlock {
                mu: b.mu,
                paths: b.paths,
                units,
            }
        })
        .collect();
    Ok(MatrixUnitSystem { k, n, blocks })
}

/// Rebuilds one lower block (`|mu| < level`) from the previous level.
fn recurse_block<S: Scalar>(
    level: Level,
    mu: IntegerPartition,
    prev: &[BuildBlock<S>],
    ctx: &mut DiagCtx,
    p_sparse: &Sparse<S>,
    npows: &[S],
) -> Result<BuildBlock<S>, UnitError> {
    let degenerate = |mu: &IntegerPartition| UnitError::DegenerateParameter {
        level,
        mu: mu.clone(),
    };
    let paths = enumerate_vt(level, &mu)?;
    let mut block = BuildBlock::new(mu, paths);

    // For each path: the previous-level units e_{P-, T(P)} and e_{T(P), P-}.
    let mut lefts: Vec<&Sparse<S>> = Vec::new();
    let mut rights: Vec<&Sparse<S>> = Vec::new();
    for p in &block.paths {
        let pm = p.minus_last();
        let tp = t_map(p)?;
        let beta = pm.final_partition().clone();
        let prev_block = prev
            .iter()
            .find(|b| b.mu == beta)
            .ok_or_else(|| UnitError::ConstructionOrder(format!("missing block {beta}")))?;
        let i = *prev_block
            .path_idx
            .get(&pm)
            .ok_or_else(|| UnitError::ConstructionOrder(format!("missing path {pm}")))?;
        let j = *prev_block
            .path_idx
            .get(&tp)
            .ok_or_else(|| UnitError::ConstructionOrder(format!("missing path {tp}")))?;
        lefts.push(&prev_block.units[i][j]);
        rights.push(&prev_block.units[j][i]);
    }

    let sandwich = |ctx: &mut DiagCtx, l: &Sparse<S>, r: &Sparse<S>| {
        let lp = sp_mul(ctx, l, p_sparse, npows);
        sp_mul(ctx, &lp, r, npows)
    };

    let m = block.paths.len();
    let mut diag: Vec<Sparse<S>> = Vec::with_capacity(m);
    for i in 0..m {
        let quasi = sandwich(ctx, lefts[i], rights[i]);
        let square = sp_mul(ctx, &quasi, &quasi, npows);
        let c = sp_proportionality(&square, &quasi).ok_or_else(|| degenerate(&block.mu))?;
        let cinv = c.inv().ok_or_else(|| degenerate(&block.mu))?;
        diag.push(sp_scale(&quasi, &cinv));
    }

    let mut units: Vec<Vec<Sparse<S>>> = vec![vec![Vec::new(); m]; m];
    for (i, d) in diag.iter().enumerate() {
        units[i][i] = d.clone();
    }
    if m > 1 {
        for i in 1..m {
            let quasi_i0 = sandwich(ctx, lefts[i], rights[0]);
            let quasi_0i = sandwich(ctx, lefts[0], rights[i]);
            let f = {
                let t = sp_mul(ctx, &diag[i], &quasi_i0, npows);
                sp_mul(ctx, &t, &diag[0], npows)
            };
            let g = {
                let t = sp_mul(ctx, &diag[0], &quasi_0i, npows);
                sp_mul(ctx, &t, &diag[i], npows)
            };
            let fg = sp_mul(ctx, &f, &g, npows);
            let c = sp_proportionality(&fg, &diag[i]).ok_or_else(|| degenerate(&block.mu))?;
            let cinv = c.inv().ok_or_else(|| degenerate(&block.mu))?;
            units[i][0] = sp_scale(&f, &cinv);
            units[0][i] = g;
        }
        for i in 1..m {
            for j in 1..m {
                if i != j {
                    let left = units[i][0].clone();
                    units[i][j] = sp_mul(ctx, &left, &units[0][j], npows);
                }
            }
        }
    }
    block.units = units;
    Ok(block)
}

/// Seeds the top block of a level from Young's units of the symmetric group
/// on `floor(level)` letters.
fn seed_block<S: Scalar>(
    level: Level,
    lam: IntegerPartition,
    one_minus_z: &Sparse<S>,
    ctx: &mut DiagCtx,
    npows: &[S],
) -> Result<BuildBlock<S>, UnitError> {
    let paths = enumerate_vt(level, &lam)?;
    let mut block = BuildBlock::new(lam.clone(), paths);
    let tableaux = enumerate_syt(&lam);

    // First-letter-order index of each path's standard tableau; at a half
    // level the strictly growing part is the path without its final entry.
    let mut yflo_idx = Vec::with_capacity(block.paths.len());
    for p in &block.paths {
        let growth = if level.is_integer() {
            p.clone()
        } else {
            p.minus_last()
        };
        let t = vt_to_syt(&growth)?;
        let idx = tableaux
            .iter()
            .position(|s| s == &t)
            .ok_or_else(|| UnitError::ConstructionOrder(format!("tableau missing for {p}")))?;
        yflo_idx.push(idx + 1);
    }

    let m = block.paths.len();
    let mut units = vec![vec![Vec::new(); m]; m];
    for i in 0..m {
        for j in 0..m {
            // The coefficient-faithful permutation embedding reverses products,
            // so the seed for (P_i, P_j) uses the Young unit with transposed
            // tableau indices.
            let s = young_unit(&lam, yflo_idx[j], yflo_idx[i])?;
            let mut embedded: Sparse<S> = Vec::new();
            for (perm, c) in s.terms() {
                let d = padded_permutation_diagram(perm, ctx.order());
                embedded.push((ctx.id(&d), S::from_rational(c)));
            }
            embedded.sort_by_key(|(id, _)| *id);
            units[i][j] = sp_mul(ctx, one_minus_z, &embedded, npows);
        }
    }
    block.units = units;
    Ok(block)
}

/// The diagram of a permutation of `{1..g}` inside order `order >= g`:
/// `{{i, p(i)'}}` plus identity strands above `g`.
fn padded_permutation_diagram(p: &Permutation, order: usize) -> PartitionDiagram {
    let g = p.degree();
    let mut blocks: Vec<Vec<i32>> = (1..=g)
        .map(|i| vec![i as i32, -(p.apply(i) as i32)])
        .collect();
    for i in g + 1..=order {
        blocks.push(vec![i as i32, -(i as i32)]);
    }
    PartitionDiagram::new(order, blocks).expect("permutation blocks")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::RationalFunction;
    use crate::diagram::enumerate_diagrams;
    use crate::DEFAULT_ORDER_LIMIT;

    type Rf = RationalFunction;

    fn rf(num: &[i64], den: &[i64]) -> Rf {
        Rf::from_integer_coeffs(num, den).unwrap()
    }

    fn symbolic_system(k: usize) -> MatrixUnitSystem<Rf> {
        build_system(k, Rf::variable(), DEFAULT_ORDER_LIMIT).unwrap()
    }

    #[test]
    fn p_elements() {
        let p: AlgebraElement<Rf> = p_element(Level::integer(2), 2).unwrap();
        let d = PartitionDiagram::new(2, vec![vec![1, -1], vec![2], vec![-2]]).unwrap();
        assert_eq!(p, AlgebraElement::from_diagram(d));
        let p: AlgebraElement<Rf> = p_element(Level::half_above(1), 2).unwrap();
        assert_eq!(
            p,
            AlgebraElement::from_diagram(enumerate_diagrams(2).unwrap()[0].clone())
        );
        let p: AlgebraElement<Rf> = p_element(Level::integer(1), 1).unwrap();
        let d = PartitionDiagram::new(1, vec![vec![1], vec![-1]]).unwrap();
        assert_eq!(p, AlgebraElement::from_diagram(d));
    }

    #[test]
    fn order_one_system_by_hand() {
        let sys = symbolic_system(1);
        assert_eq!(sys.summary().len(), 2);
        let empty = IntegerPartition::empty();
        let e0 = &sys.block(&empty).unwrap().units[0][0];
        // e_{()} = (1/n) d_{{1},{1'}}
        let split = PartitionDiagram::new(1, vec![vec![1], vec![-1]]).unwrap();
        let mut want: AlgebraElement<Rf> = AlgebraElement::zero(1);
        want.add_term(split.clone(), rf(&[1], &[0, 1]));
        assert_eq!(e0, &want);
        // e_{(1)} = 1 - (1/n) d_{{1},{1'}}
        let one_block = IntegerPartition::new(vec![1]).unwrap();
        let e1 = &sys.block(&one_block).unwrap().units[0][0];
        let want = AlgebraElement::one(1).sub(&want).unwrap();
        assert_eq!(e1, &want);
        assert_eq!(sys.diagonal_sum(), AlgebraElement::one(1));
    }

    #[test]
    fn order_two_pinned_idempotents() {
        let sys = symbolic_system(2);
        let ds = enumerate_diagrams(2).unwrap();
        let empty = IntegerPartition::empty();
        let block = sys.block(&empty).unwrap();
        assert_eq!(block.paths.len(), 2);
        // The second path is ((),(),(1),(),()); its diagonal unit is the
        // four-term idempotent.
        let e = &block.units[1][1];
        let mut want: AlgebraElement<Rf> = AlgebraElement::zero(2);
        want.add_term(ds[3].clone(), rf(&[1], &[-1, 1]));
        want.add_term(ds[4].clone(), rf(&[-1], &[0, -1, 1]));
        want.add_term(ds[13].clone(), rf(&[-1], &[0, -1, 1]));
        want.add_term(ds[14].clone(), rf(&[1], &[0, 0, -1, 1]));
        assert_eq!(e, &want);
        // Completeness.
        assert_eq!(sys.diagonal_sum(), AlgebraElement::one(2));
    }

    #[test]
    fn matrix_unit_axioms_order_two() {
        let sys = symbolic_system(2);
        let n = Rf::variable();
        let mut all: Vec<(usize, usize, usize, &AlgebraElement<Rf>)> = Vec::new();
        for (b, block) in sys.blocks().iter().enumerate() {
            for i in 0..block.paths.len() {
                for j in 0..block.paths.len() {
                    all.push((b, i, j, &block.units[i][j]));
                }
            }
        }
        assert_eq!(all.len(), 15);
        for &(b1, i1, j1, u) in &all {
            for &(b2, i2, j2, v) in &all {
                let prod = u.multiply(v, &n).unwrap();
                if b1 == b2 && j1 == i2 {
                    let want = &sys.blocks()[b1].units[i1][j2];
                    assert_eq!(&prod, want);
                } else {
                    assert!(prod.is_zero());
                }
            }
        }
    }

    #[test]
    fn unit_denominators_stay_in_the_degenerate_set() {
        // Every coefficient of every order-2 unit has poles only at the
        // degenerate parameters {0, 1, 2}.
        use crate::arith::Polynomial;
        let divide_out = |p: &Polynomial, r: i64| -> Polynomial {
            let lin = Polynomial::from_integers(&[-r, 1]);
            let mut q = p.clone();
            loop {
                let (quot, rem) = q.div_rem(&lin).unwrap();
                if rem.is_zero() {
                    q = quot;
                } else {
                    return q;
                }
            }
        };
        let sys = symbolic_system(2);
        for block in sys.blocks() {
            for row in &block.units {
                for u in row {
                    for c in u.terms().values() {
                        let mut den = c.den().clone();
                        for r in [0, 1, 2] {
                            den = divide_out(&den, r);
                        }
                        assert!(den.is_constant(), "unexpected pole in {c}");
                    }
                }
            }
        }
    }

    #[test]
    fn degenerate_parameter_detected() {
        use crate::arith::{rat_int, Rational};
        // n = 1 lies in the degenerate set for k = 2.
        let r = build_system(2usize, rat_int(1), DEFAULT_ORDER_LIMIT);
        assert!(
            matches!(
                r,
                Err(UnitError::DegenerateParameter { .. })
            ),
            "expected degeneracy at n = 1"
        );
        // A generic rational value succeeds.
        let ok = build_system(2usize, Rational::new(7.into(), 2.into()), DEFAULT_ORDER_LIMIT);
        assert!(ok.is_ok());
    }

    #[test]
    fn unit_lookup_validates_pairs() {
        let sys = symbolic_system(1);
        let p_empty = VacillatingTableau::new(vec![
            IntegerPartition::empty(),
            IntegerPartition::empty(),
            IntegerPartition::empty(),
        ])
        .unwrap();
        let p_one = VacillatingTableau::new(vec![
            IntegerPartition::empty(),
            IntegerPartition::empty(),
            IntegerPartition::new(vec![1]).unwrap(),
        ])
        .unwrap();
        assert!(sys.unit(&p_empty, &p_empty).is_ok());
        assert!(matches!(
            sys.unit(&p_empty, &p_one),
            Err(UnitError::InvalidPair(_))
        ));
    }
}
