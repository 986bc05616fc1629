//! Partition diagrams and the partition monoid `A_k`.
//!
//! An order-`k` partition diagram is a set partition of the `2k` vertices
//! `{1, .., k, 1', .., k'}`. Unprimed vertices form the top row and are
//! encoded as positive integers `1..=k`; primed vertices form the bottom row
//! and are encoded as negative integers `-1..=-k`. Vertices are ordered
//! `1 < 2 < .. < k < 1' < 2' < .. < k'`; canonical form sorts each block by
//! that order and sorts blocks by their minimal vertex.

use std::collections::HashSet;
use std::fmt;

use crate::DEFAULT_ORDER_LIMIT;

/// Errors from diagram construction and composition.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("diagram orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("order {got} exceeds the configured limit {limit}")]
    ResourceLimit { got: usize, limit: usize },
    #[error("index {index} out of range for order {order}")]
    IndexError { index: usize, order: usize },
    #[error("blocks do not form a set partition of the {0} vertices")]
    InvalidDiagram(usize),
}

/// A set partition of `{1..k, 1'..k'}` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionDiagram {
    order: usize,
    blocks: Vec<Vec<i32>>,
}

/// Result of stacking one diagram on top of another: the composed diagram and
/// the number of connected components confined to the identified middle row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComposeResult {
    pub diagram: PartitionDiagram,
    pub middle_components: usize,
}

/// The distinguished diagrams used throughout the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialDiagram {
    /// `{{1,1'}, .., {k,k'}}`.
    Identity,
    /// `{{1,k'}, {2,(k-1)'}, .., {k,1'}}`.
    Reverse,
    /// Isolates `i` and `i'`, identity elsewhere.
    PInt(usize),
    /// Merges `{i, i+1, i', (i+1)'}`, identity elsewhere.
    PHalf(usize),
}

impl PartitionDiagram {
    /// Position of a vertex in the order `1 < .. < k < 1' < .. < k'`.
    fn rank(order: usize, v: i32) -> usize {
        if v > 0 {
            v as usize - 1
        } else {
            order + (-v) as usize - 1
        }
    }

    fn vertex_of_rank(order: usize, r: usize) -> i32 {
        if r < order {
            (r + 1) as i32
        } else {
            -((r - order + 1) as i32)
        }
    }

    fn canonicalize(order: usize, mut blocks: Vec<Vec<i32>>) -> Vec<Vec<i32>> {
        for b in &mut blocks {
            b.sort_by_key(|&v| Self::rank(order, v));
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort_by_key(|b| Self::rank(order, b[0]));
        blocks
    }

    /// Validates and canonicalizes a block list.
    pub fn new(order: usize, blocks: Vec<Vec<i32>>) -> Result<Self, DiagramError> {
        if order == 0 {
            return Err(DiagramError::InvalidDiagram(0));
        }
        let mut seen = HashSet::new();
        for b in &blocks {
            for &v in b {
                let m = v.unsigned_abs() as usize;
                if v == 0 || m > order || !seen.insert(v) {
                    return Err(DiagramError::InvalidDiagram(2 * order));
                }
            }
        }
        if seen.len() != 2 * order {
            return Err(DiagramError::InvalidDiagram(2 * order));
        }
        Ok(PartitionDiagram {
            order,
            blocks: Self::canonicalize(order, blocks),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn blocks(&self) -> &[Vec<i32>] {
        &self.blocks
    }

    pub fn identity(k: usize) -> Self {
        let blocks = (1..=k as i32).map(|i| vec![i, -i]).collect();
        PartitionDiagram {
            order: k,
            blocks: Self::canonicalize(k, blocks),
        }
    }

    /// The order-reversing permutation diagram `{{i, (k+1-i)'}}`.
    pub fn reverse(k: usize) -> Self {
        let blocks = (1..=k as i32).map(|i| vec![i, -(k as i32 + 1 - i)]).collect();
        PartitionDiagram {
            order: k,
            blocks: Self::canonicalize(k, blocks),
        }
    }

    /// `p_i`: the identity with `i` and `i'` split into singletons.
    pub fn p_int(i: usize, k: usize) -> Result<Self, DiagramError> {
        if i == 0 || i > k {
            return Err(DiagramError::IndexError { index: i, order: k });
        }
        let mut blocks: Vec<Vec<i32>> = Vec::new();
        for j in 1..=k as i32 {
            if j as usize == i {
                blocks.push(vec![j]);
                blocks.push(vec![-j]);
            } else {
                blocks.push(vec![j, -j]);
            }
        }
        Ok(PartitionDiagram {
            order: k,
            blocks: Self::canonicalize(k, blocks),
        })
    }

    /// `p_{i+1/2}`: the identity with `{i, i+1, i', (i+1)'}` merged.
    pub fn p_half(i: usize, k: usize) -> Result<Self, DiagramError> {
        if i == 0 || i + 1 > k {
            return Err(DiagramError::IndexError { index: i, order: k });
        }
        let mut blocks: Vec<Vec<i32>> = Vec::new();
        for j in 1..=k as i32 {
            if j as usize == i {
                blocks.push(vec![j, j + 1, -j, -(j + 1)]);
            } else if j as usize != i + 1 {
                blocks.push(vec![j, -j]);
            }
        }
        Ok(PartitionDiagram {
            order: k,
            blocks: Self::canonicalize(k, blocks),
        })
    }

    /// Stacks `self` on top of `other`, identifying the bottom row of `self`
    /// with the top row of `other`, and projects out the middle row.
    pub fn compose(&self, other: &PartitionDiagram) -> Result<ComposeResult, DiagramError> {
        if self.order != other.order {
            return Err(DiagramError::OrderMismatch(self.order, other.order));
        }
        let k = self.order;
        // Vertex layout: 0..k top, k..2k middle, 2k..3k bottom.
        let mut parent: Vec<usize> = (0..3 * k).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let union = |parent: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(parent, a), find(parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        };
        let upper = |v: i32| -> usize {
            if v > 0 {
                v as usize - 1
            } else {
                k + (-v) as usize - 1
            }
        };
        let lower = |v: i32| -> usize {
            if v > 0 {
                k + v as usize - 1
            } else {
                2 * k + (-v) as usize - 1
            }
        };
        for b in &self.blocks {
            for w in b.windows(2) {
                union(&mut parent, upper(w[0]), upper(w[1]));
            }
        }
        for b in &other.blocks {
            for w in b.windows(2) {
                union(&mut parent, lower(w[0]), lower(w[1]));
            }
        }
        let mut members: std::collections::HashMap<usize, Vec<usize>> = Default::default();
        for x in 0..3 * k {
            members.entry(find(&mut parent, x)).or_default().push(x);
        }
        let mut blocks = Vec::new();
        let mut middle = 0usize;
        for (_, vs) in members {
            let mut block = Vec::new();
            for v in vs {
                if v < k {
                    block.push((v + 1) as i32);
                } else if v >= 2 * k {
                    block.push(-((v - 2 * k + 1) as i32));
                }
            }
            if block.is_empty() {
                middle += 1;
            } else {
                blocks.push(block);
            }
        }
        Ok(ComposeResult {
            diagram: PartitionDiagram {
                order: k,
                blocks: Self::canonicalize(k, blocks),
            },
            middle_components: middle,
        })
    }

    /// Number of blocks containing both a top and a bottom vertex.
    pub fn propagation_number(&self) -> usize {
        self.blocks
            .iter()
            .filter(|b| b.iter().any(|&v| v > 0) && b.iter().any(|&v| v < 0))
            .count()
    }

    /// Whether `k` and `k'` share a block, i.e. the diagram lies in the
    /// half-integer submonoid `A_{k-1/2}` of `A_k`.
    pub fn in_half_monoid(&self) -> bool {
        let k = self.order as i32;
        self.blocks
            .iter()
            .any(|b| b.contains(&k) && b.contains(&-k))
    }

    /// JSON form `{"k": 2, "blocks": [[1, 2, -1, -2]]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "k": self.order, "blocks": self.blocks })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, DiagramError> {
        let bad = || DiagramError::InvalidDiagram(0);
        let order = v.get("k").and_then(|k| k.as_u64()).ok_or_else(bad)? as usize;
        let blocks = v
            .get("blocks")
            .and_then(|b| b.as_array())
            .ok_or_else(bad)?
            .iter()
            .map(|b| {
                b.as_array()
                    .ok_or_else(bad)?
                    .iter()
                    .map(|x| x.as_i64().map(|x| x as i32).ok_or_else(bad))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        PartitionDiagram::new(order, blocks)
    }
}

impl fmt::Debug for PartitionDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PartitionDiagram {
    /// `{{1,2,-1},{-2}}` with primed vertices negative.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (j, v) in b.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

/// Builds one of the distinguished diagrams at order `k`.
pub fn special_diagram(kind: SpecialDiagram, k: usize) -> Result<PartitionDiagram, DiagramError> {
    match kind {
        SpecialDiagram::Identity => Ok(PartitionDiagram::identity(k)),
        SpecialDiagram::Reverse => Ok(PartitionDiagram::reverse(k)),
        SpecialDiagram::PInt(i) => PartitionDiagram::p_int(i, k),
        SpecialDiagram::PHalf(i) => PartitionDiagram::p_half(i, k),
    }
}

/// The order-2 diagram list pinned to the conventional computer-algebra
/// ordering; enumeration for k = 2 must reproduce it exactly.
const K2_ORDER: [&[&[i32]]; 15] = [
    &[&[1, 2, -1, -2]],
    &[&[1, 2, -2], &[-1]],
    &[&[1, 2, -1], &[-2]],
    &[&[1, 2], &[-1, -2]],
    &[&[1, 2], &[-1], &[-2]],
    &[&[1, -1, -2], &[2]],
    &[&[1, -2], &[2, -1]],
    &[&[1, -2], &[2], &[-1]],
    &[&[1, -1], &[2, -2]],
    &[&[1], &[2, -1, -2]],
    &[&[1], &[2, -2], &[-1]],
    &[&[1, -1], &[2], &[-2]],
    &[&[1], &[2, -1], &[-2]],
    &[&[1], &[2], &[-1, -2]],
    &[&[1], &[2], &[-1], &[-2]],
];

/// All `Bell(2k)` order-`k` diagrams, each exactly once, in a deterministic
/// order: the pinned list for k = 2, and restricted-growth-string order on the
/// vertex sequence `1, .., k, 1', .., k'` otherwise.
pub fn enumerate_diagrams(k: usize) -> Result<Vec<PartitionDiagram>, DiagramError> {
    enumerate_diagrams_with_limit(k, DEFAULT_ORDER_LIMIT)
}

/// As [`enumerate_diagrams`] with an explicit order cap.
pub fn enumerate_diagrams_with_limit(
    k: usize,
    limit: usize,
) -> Result<Vec<PartitionDiagram>, DiagramError> {
    if k == 0 {
        return Err(DiagramError::InvalidDiagram(0));
    }
    if k > limit {
        return Err(DiagramError::ResourceLimit { got: k, limit });
    }
    if k == 2 {
        return Ok(K2_ORDER
            .iter()
            .map(|blocks| {
                PartitionDiagram::new(2, blocks.iter().map(|b| b.to_vec()).collect())
                    .expect("pinned diagram list is valid")
            })
            .collect());
    }
    let m = 2 * k;
    let mut out = Vec::new();
    let mut rgs = vec![0usize; m];
    loop {
        let nblocks = rgs.iter().copied().max().unwrap_or(0) + 1;
        let mut blocks = vec![Vec::new(); nblocks];
        for (r, &b) in rgs.iter().enumerate() {
            blocks[b].push(PartitionDiagram::vertex_of_rank(k, r));
        }
        out.push(PartitionDiagram {
            order: k,
            blocks: PartitionDiagram::canonicalize(k, blocks),
        });
        // Next restricted growth string in lexicographic order.
        let mut i = m - 1;
        loop {
            if i == 0 {
                return Ok(out);
            }
            let cap = rgs[..i].iter().copied().max().unwrap_or(0) + 1;
            if rgs[i] < cap {
                rgs[i] += 1;
                for x in rgs[i + 1..].iter_mut() {
                    *x = 0;
                }
                break;
            }
            i -= 1;
        }
    }
}

/// `Bell(2k)` computed independently of the enumerator, for cardinality
/// checks.
pub fn bell_number(m: usize) -> u64 {
    // Bell triangle.
    let mut row = vec![1u64];
    for _ in 0..m {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            let last = *next.last().unwrap();
            next.push(last + x);
        }
        row = next;
    }
    row[0]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(k: usize, blocks: &[&[i32]]) -> PartitionDiagram {
        PartitionDiagram::new(k, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn canonical_form_is_order_insensitive() {
        let a = d(2, &[&[-1], &[2, 1, -2]]);
        let b = d(2, &[&[1, 2, -2], &[-1]]);
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "{{1,2,-2},{-1}}");
    }

    #[test]
    fn invalid_blocks_rejected() {
        assert!(PartitionDiagram::new(2, vec![vec![1, 2, -1]]).is_err());
        assert!(PartitionDiagram::new(2, vec![vec![1, 1, 2, -1, -2]]).is_err());
        assert!(PartitionDiagram::new(2, vec![vec![1, 2, 3, -1, -2]]).is_err());
    }

    #[test]
    fn compose_matches_worked_order2_products() {
        let ds = enumerate_diagrams(2).unwrap();
        // pi2 . pi10 = pi1 with one middle component.
        let r = ds[1].compose(&ds[9]).unwrap();
        assert_eq!(r.diagram, ds[0]);
        assert_eq!(r.middle_components, 1);
        // pi7 . pi7 = pi9 (identity), no middle components.
        let r = ds[6].compose(&ds[6]).unwrap();
        assert_eq!(r.diagram, ds[8]);
        assert_eq!(r.middle_components, 0);
        // Identity is neutral.
        let id = PartitionDiagram::identity(2);
        for x in &ds {
            assert_eq!(&id.compose(x).unwrap().diagram, x);
            assert_eq!(&x.compose(&id).unwrap().diagram, x);
        }
    }

    #[test]
    fn compose_order5_worked_example() {
        let d1 = d(
            5,
            &[&[1, 2, 4, 5, -4], &[3, -2], &[-1, -5], &[-3]],
        );
        let d2 = d(5, &[&[2, -5], &[4, -4, -3], &[1, -2, -1], &[3], &[5]]);
        let want = d(5, &[&[1, 2, 4, 5, -4, -3], &[3, -5], &[-1, -2]]);
        let r = d1.compose(&d2).unwrap();
        assert_eq!(r.diagram, want);
        assert_eq!(r.middle_components, 1);
    }

    #[test]
    fn order_mismatch_rejected() {
        let a = PartitionDiagram::identity(2);
        let b = PartitionDiagram::identity(3);
        assert_eq!(a.compose(&b), Err(DiagramError::OrderMismatch(2, 3)));
    }

    #[test]
    fn propagation_number_examples() {
        let x = d(5, &[&[-5, 4], &[-4, 1, 2, 3], &[-3, -1], &[-2], &[5]]);
        assert_eq!(x.propagation_number(), 2);
        assert_eq!(PartitionDiagram::identity(4).propagation_number(), 4);
        let singles = enumerate_diagrams(2).unwrap()[14].clone();
        assert_eq!(singles.propagation_number(), 0);
    }

    #[test]
    fn special_diagrams() {
        assert_eq!(
            PartitionDiagram::p_int(1, 2).unwrap(),
            d(2, &[&[1], &[-1], &[2, -2]])
        );
        let ds = enumerate_diagrams(2).unwrap();
        assert_eq!(PartitionDiagram::p_half(1, 2).unwrap(), ds[0]);
        assert_eq!(PartitionDiagram::reverse(2), ds[6]);
        assert!(PartitionDiagram::p_int(3, 2).is_err());
        assert!(PartitionDiagram::p_half(2, 2).is_err());
    }

    #[test]
    fn half_monoid_membership() {
        let ds = enumerate_diagrams(2).unwrap();
        assert!(PartitionDiagram::identity(2).in_half_monoid());
        assert!(!ds[6].in_half_monoid());
        assert!(ds[10].in_half_monoid());
    }

    #[test]
    fn enumeration_counts_and_uniqueness() {
        for k in 1..=3 {
            let ds = enumerate_diagrams(k).unwrap();
            assert_eq!(ds.len() as u64, bell_number(2 * k));
            let set: HashSet<_> = ds.iter().cloned().collect();
            assert_eq!(set.len(), ds.len());
        }
        assert_eq!(enumerate_diagrams(1).unwrap().len(), 2);
        assert_eq!(enumerate_diagrams(3).unwrap().len(), 203);
        assert!(matches!(
            enumerate_diagrams(5),
            Err(DiagramError::ResourceLimit { .. })
        ));
        assert_eq!(enumerate_diagrams_with_limit(5, 5).unwrap().len(), 115975);
    }

    #[test]
    fn json_round_trip() {
        for x in enumerate_diagrams(2).unwrap() {
            assert_eq!(PartitionDiagram::from_json(&x.to_json()).unwrap(), x);
        }
    }
}
