//! The Bratteli diagram of the partition-algebra tower and vacillating
//! tableaux.
//!
//! Levels are indexed by nonnegative half-integers. The vertices at level `l`
//! are the integer partitions of size at most `floor(l)`. Walking downwards,
//! a step from an integer level to the next half level keeps the partition or
//! removes one box; a step from a half level to the next integer level keeps
//! it or adds one box. A vacillating tableau is the vertex sequence of a path
//! starting at the empty partition on level 0.

use std::collections::BTreeMap;
use std::fmt;

use crate::young::{IntegerPartition, StandardYoungTableau, YoungError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BratteliError {
    #[error("{0} is not a vertex at level {1}")]
    InvalidVertex(IntegerPartition, Level),
    #[error("sequence is not a path in the Bratteli diagram")]
    InvalidPath,
    #[error("operation not applicable: {0}")]
    NotApplicable(String),
    #[error(transparent)]
    Young(#[from] YoungError),
}

/// A level of the Bratteli diagram, stored as twice its value so that
/// half-integers stay exact.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Level {
    twice_value: usize,
}

impl Level {
    pub fn from_twice(twice_value: usize) -> Self {
        Level { twice_value }
    }

    pub fn integer(k: usize) -> Self {
        Level {
            twice_value: 2 * k,
        }
    }

    /// The level `k + 1/2`.
    pub fn half_above(k: usize) -> Self {
        Level {
            twice_value: 2 * k + 1,
        }
    }

    pub fn twice(&self) -> usize {
        self.twice_value
    }

    pub fn is_integer(&self) -> bool {
        self.twice_value.is_multiple_of(2)
    }

    pub fn floor(&self) -> usize {
        self.twice_value / 2
    }
}

impl fmt::Debug for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.floor())
        } else {
            write!(f, "{}/2", self.twice_value)
        }
    }
}

/// The vertices at a level: all partitions of size at most `floor(level)`,
/// in the partition order.
pub fn vertices(level: Level) -> Vec<IntegerPartition> {
    let mut out = Vec::new();
    for m in 0..=level.floor() {
        out.extend(IntegerPartition::partitions_of(m));
    }
    out
}

/// A path in the Bratteli diagram from level 0, stored as its vertex
/// sequence; `entries[t]` sits at level `t/2`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VacillatingTableau {
    entries: Vec<IntegerPartition>,
}

impl VacillatingTableau {
    pub fn new(entries: Vec<IntegerPartition>) -> Result<Self, BratteliError> {
        let t = VacillatingTableau { entries };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<(), BratteliError> {
        if self.entries.is_empty() || !self.entries[0].is_empty() {
            return Err(BratteliError::InvalidPath);
        }
        for (t, w) in self.entries.windows(2).enumerate() {
            let (a, b) = (&w[0], &w[1]);
            let ok = if t % 2 == 0 {
                // integer -> half: keep or remove one box
                a == b || a.covers(b)
            } else {
                // half -> integer: keep or add one box
                a == b || b.covers(a)
            };
            if !ok {
                return Err(BratteliError::InvalidPath);
            }
            if b.size() > Level::from_twice(t + 1).floor() {
                return Err(BratteliError::InvalidPath);
            }
        }
        Ok(())
    }

    pub fn entries(&self) -> &[IntegerPartition] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn final_level(&self) -> Level {
        Level::from_twice(self.entries.len() - 1)
    }

    pub fn final_partition(&self) -> &IntegerPartition {
        self.entries.last().expect("nonempty path")
    }

    /// The path with its last entry removed.
    pub fn minus_last(&self) -> VacillatingTableau {
        VacillatingTableau {
            entries: self.entries[..self.entries.len() - 1].to_vec(),
        }
    }

    /// JSON form: an array of part lists.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self
            .entries
            .iter()
            .map(|p| p.parts().to_vec())
            .collect::<Vec<_>>())
    }
}

impl fmt::Debug for VacillatingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VacillatingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All paths from level 0 to `level` ending at `mu`, in lexicographic order
/// of their entry sequences (partitions ordered by size, then parts).
pub fn enumerate_vt(
    level: Level,
    mu: &IntegerPartition,
) -> Result<Vec<VacillatingTableau>, BratteliError> {
    if mu.size() > level.floor() {
        return Err(BratteliError::InvalidVertex(mu.clone(), level));
    }
    let mut paths: Vec<Vec<IntegerPartition>> = vec![vec![IntegerPartition::empty()]];
    for t in 0..level.twice() {
        let mut next = Vec::new();
        for path in &paths {
            let last = path.last().unwrap();
            for step in edge_targets(last, t) {
                // Prune: remaining integer levels must be able to grow to mu.
                let remaining_adds = (level.twice() - t) / 2;
                if step.size() + remaining_adds < mu.size() {
                    continue;
                }
                let mut np = path.clone();
                np.push(step);
                next.push(np);
            }
        }
        paths = next;
    }
    let mut out: Vec<VacillatingTableau> = paths
        .into_iter()
        .filter(|p| p.last().unwrap() == mu)
        .map(|entries| VacillatingTableau { entries })
        .collect();
    out.sort();
    Ok(out)
}

/// The possible successors of `p` when stepping from twice-level `t` to
/// `t + 1`.
fn edge_targets(p: &IntegerPartition, t: usize) -> Vec<IntegerPartition> {
    let mut out = vec![p.clone()];
    if t.is_multiple_of(2) {
        // Remove one box, every distinct way.
        let parts = p.parts();
        for r in 0..parts.len() {
            if r + 1 == parts.len() || parts[r] > parts[r + 1] {
                let mut q = parts.to_vec();
                q[r] -= 1;
                if q[r] == 0 {
                    q.remove(r);
                }
                out.push(IntegerPartition::new(q).expect("box removal"));
            }
        }
    } else {
        // Add one box, every distinct way.
        for r in 0..=p.len() {
            if let Some(q) = p.with_box_in_row(r) {
                out.push(q);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// The canonical companion path used by the matrix-unit recursion.
///
/// For a path `r` ending at level `l` with final entry of size at most
/// `l - 1`, the result has length one less: its last entry is the next-to-last
/// entry of `r`, the entry below that is the final entry `mu` of `r`, and the
/// remaining entries toward level 0 remove one box from the northernmost
/// (topmost French) row at every half-level position and stay constant into
/// every integer position. Once the partition is exhausted the path continues
/// along the empty column, which the same rule produces.
pub fn t_map(r: &VacillatingTableau) -> Result<VacillatingTableau, BratteliError> {
    let len = r.len();
    if len < 3 {
        return Err(BratteliError::NotApplicable(
            "path must reach at least level 1".into(),
        ));
    }
    let mu = r.final_partition();
    // |mu| <= final level - 1, i.e. 2|mu| <= twice - 2.
    if 2 * mu.size() + 2 > len - 1 {
        return Err(BratteliError::NotApplicable(format!(
            "final entry {mu} too large at level {}",
            r.final_level()
        )));
    }
    let mut entries = vec![IntegerPartition::empty(); len - 1];
    entries[len - 2] = r.entries()[len - 2].clone();
    entries[len - 3] = mu.clone();
    for idx in (0..len - 3).rev() {
        entries[idx] = if idx % 2 == 1 {
            entries[idx + 1].strip_northernmost_box()
        } else {
            entries[idx + 1].clone()
        };
    }
    // The construction is valid by design; validate anyway so that any
    // divergence surfaces as a diagnostic instead of a silent bad path.
    VacillatingTableau::new(entries)
}

/// Identifies a strictly growing path ending at an integer level `l` with a
/// standard Young tableau of shape `lambda ⊢ l`: the box added at the `i`-th
/// integer step is labeled `i`.
pub fn vt_to_syt(p: &VacillatingTableau) -> Result<StandardYoungTableau, BratteliError> {
    let level = p.final_level();
    if !level.is_integer() || p.final_partition().size() != level.floor() {
        return Err(BratteliError::NotApplicable(
            "path must grow strictly to a partition of its level".into(),
        ));
    }
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for i in 1..=level.floor() {
        let before = &p.entries()[2 * i - 1];
        let after = &p.entries()[2 * i];
        let (r, _) = before.added_box(after).ok_or_else(|| {
            BratteliError::NotApplicable("integer step does not add a box".into())
        })?;
        if p.entries()[2 * i - 2] != *before {
            return Err(BratteliError::NotApplicable(
                "half step is not constant".into(),
            ));
        }
        if r == rows.len() {
            rows.push(Vec::new());
        }
        rows[r].push(i);
    }
    StandardYoungTableau::new(rows).map_err(Into::into)
}

/// For each vertex `mu` at level `k`, the number of paths ending there. The
/// squares sum to `Bell(2k)`.
pub fn dimension_decomposition(k: usize) -> BTreeMap<IntegerPartition, u64> {
    let mut counts: BTreeMap<IntegerPartition, u64> = BTreeMap::new();
    counts.insert(IntegerPartition::empty(), 1);
    for t in 0..2 * k {
        let mut next: BTreeMap<IntegerPartition, u64> = BTreeMap::new();
        for (p, c) in &counts {
            for q in edge_targets(p, t) {
                *next.entry(q).or_insert(0) += c;
            }
        }
        counts = next;
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::bell_number;

    fn part(parts: &[usize]) -> IntegerPartition {
        IntegerPartition::new(parts.to_vec()).unwrap()
    }

    fn vt(entries: &[&[usize]]) -> VacillatingTableau {
        VacillatingTableau::new(entries.iter().map(|p| part(p)).collect()).unwrap()
    }

    #[test]
    fn vertex_sets() {
        assert_eq!(vertices(Level::integer(0)), vec![IntegerPartition::empty()]);
        assert_eq!(
            vertices(Level::integer(2)),
            vec![
                IntegerPartition::empty(),
                part(&[1]),
                part(&[1, 1]),
                part(&[2])
            ]
        );
        assert_eq!(vertices(Level::integer(3)).len(), 1 + 1 + 2 + 3);
        assert_eq!(vertices(Level::half_above(2)).len(), 4);
    }

    #[test]
    fn path_validation() {
        assert!(VacillatingTableau::new(vec![part(&[1])]).is_err());
        // Adding on an integer->half step is illegal.
        assert!(VacillatingTableau::new(vec![
            IntegerPartition::empty(),
            part(&[1])
        ])
        .is_err());
        assert!(vt(&[&[], &[], &[1], &[], &[1]]).validate().is_ok());
    }

    #[test]
    fn path_enumeration_matches_worked_counts() {
        let empty = IntegerPartition::empty();
        let at2 = enumerate_vt(Level::integer(2), &empty).unwrap();
        assert_eq!(
            at2,
            vec![vt(&[&[], &[], &[], &[], &[]]), vt(&[&[], &[], &[1], &[], &[]])]
        );
        assert_eq!(enumerate_vt(Level::integer(2), &part(&[1])).unwrap().len(), 3);
        assert_eq!(enumerate_vt(Level::integer(2), &part(&[2])).unwrap().len(), 1);
        assert_eq!(
            enumerate_vt(Level::integer(2), &part(&[1, 1])).unwrap().len(),
            1
        );
        assert!(enumerate_vt(Level::integer(1), &part(&[2])).is_err());
    }

    #[test]
    fn t_map_pinned_examples() {
        // Worked example 1.
        let r = vt(&[&[], &[], &[1], &[1], &[2], &[1], &[2]]);
        assert_eq!(t_map(&r).unwrap(), vt(&[&[], &[], &[1], &[1], &[2], &[1]]));
        // Worked example 2.
        let r = vt(&[&[], &[], &[], &[], &[1]]);
        assert_eq!(t_map(&r).unwrap(), vt(&[&[], &[], &[1], &[]]));
        // All-empty path: the empty clause applies immediately.
        let r = vt(&[&[], &[], &[], &[], &[]]);
        assert_eq!(t_map(&r).unwrap(), vt(&[&[], &[], &[], &[]]));
        // Precondition: final entry must be small enough.
        let r = vt(&[&[], &[], &[1], &[1], &[2]]);
        assert!(t_map(&r).is_err());
    }

    #[test]
    fn t_map_always_valid_up_to_order_three() {
        for k in [2usize, 3] {
            for twice in 2..=2 * k {
                let level = Level::from_twice(twice);
                for mu in vertices(level) {
                    if 2 * mu.size() + 2 > twice {
                        continue;
                    }
                    for p in enumerate_vt(level, &mu).unwrap() {
                        let t = t_map(&p).unwrap();
                        assert_eq!(t.len(), p.len() - 1);
                        assert_eq!(t.final_partition(), &p.entries()[p.len() - 2]);
                        assert_eq!(&t.entries()[t.len() - 2], p.final_partition());
                    }
                }
            }
        }
    }

    #[test]
    fn vt_to_syt_identification() {
        let p = vt(&[&[], &[], &[1], &[1], &[2]]);
        assert_eq!(vt_to_syt(&p).unwrap().rows(), &[vec![1, 2]]);
        let p = vt(&[&[], &[], &[1], &[1], &[1, 1]]);
        assert_eq!(vt_to_syt(&p).unwrap().rows(), &[vec![1], vec![2]]);
        let p = vt(&[&[], &[], &[1], &[1], &[2], &[2], &[2, 1]]);
        assert_eq!(vt_to_syt(&p).unwrap().rows(), &[vec![1, 2], vec![3]]);
        let not_growing = vt(&[&[], &[], &[1], &[], &[1]]);
        assert!(vt_to_syt(&not_growing).is_err());
    }

    #[test]
    fn dimension_decompositions() {
        let d1 = dimension_decomposition(1);
        assert_eq!(d1[&IntegerPartition::empty()], 1);
        assert_eq!(d1[&part(&[1])], 1);
        let d2 = dimension_decomposition(2);
        assert_eq!(d2[&IntegerPartition::empty()], 2);
        assert_eq!(d2[&part(&[1])], 3);
        assert_eq!(d2[&part(&[2])], 1);
        assert_eq!(d2[&part(&[1, 1])], 1);
        for k in 1..=4 {
            let d = dimension_decomposition(k);
            let total: u64 = d.values().map(|c| c * c).sum();
            assert_eq!(total, bell_number(2 * k));
            // Counts agree with explicit path enumeration.
            if k <= 3 {
                for (mu, c) in &d {
                    let paths = enumerate_vt(Level::integer(k), mu).unwrap();
                    assert_eq!(paths.len() as u64, *c);
                }
            }
        }
    }
}
