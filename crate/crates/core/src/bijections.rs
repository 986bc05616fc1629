//! Set-partition tableaux and the bijections connecting them to vacillating
//! tableaux and partition diagrams: last-letter order, Schensted row
//! insertion on set labels, the insertion bijection between set-partition
//! tableaux and vacillating tableaux, and the RSK correspondence for
//! partition diagrams with its inverse.
//!
//! Throughout, cell labels are either the empty label or nonempty, pairwise
//! disjoint subsets of `{1..k}`; labels compare in last-letter order (by
//! maximum element, with the empty label below everything). Tableaux are in
//! French convention, row 1 at the bottom. The padded first part of the
//! vacillating-tableau image is taken with `eta = 2k`.

use std::cmp::Ordering;
use std::fmt;

use crate::bratteli::{enumerate_vt, Level, VacillatingTableau};
use crate::diagram::PartitionDiagram;
use crate::young::IntegerPartition;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BijectionError {
    #[error("not a valid set-partition tableau: {0}")]
    InvalidTableau(String),
    #[error("tableau pair has mismatched shapes")]
    ShapeMismatch,
}

fn bad(msg: impl Into<String>) -> BijectionError {
    BijectionError::InvalidTableau(msg.into())
}

/// A cell label: a sorted set of positive integers, empty for the blank
/// label.
pub type CellLabel = Vec<usize>;

/// Last-letter order: compare by maximum element, the empty label counting
/// as zero.
pub fn lastletter_cmp(a: &CellLabel, b: &CellLabel) -> Ordering {
    let ma = a.last().copied().unwrap_or(0);
    let mb = b.last().copied().unwrap_or(0);
    ma.cmp(&mb)
}

/// A partition-shaped grid of cell labels in French convention.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetPartitionTableau {
    rows: Vec<Vec<CellLabel>>,
}

impl SetPartitionTableau {
    /// Builds a tableau, checking only the shape (weakly decreasing row
    /// lengths bottom-up) and sortedness of each label. Content constraints
    /// are checked by [`SetPartitionTableau::validate_content`].
    pub fn new(rows: Vec<Vec<CellLabel>>) -> Result<Self, BijectionError> {
        for w in rows.windows(2) {
            if w[1].len() > w[0].len() {
                return Err(bad("row lengths must weakly decrease upwards"));
            }
        }
        if rows.last().is_some_and(|r| r.is_empty()) {
            return Err(bad("empty top row"));
        }
        for row in &rows {
            for label in row {
                if label.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(bad("labels must be strictly sorted sets"));
                }
            }
        }
        Ok(SetPartitionTableau { rows })
    }

    pub fn empty() -> Self {
        SetPartitionTableau { rows: Vec::new() }
    }

    /// A single bottom row of `m` empty labels.
    pub fn blank_row(m: usize) -> Self {
        SetPartitionTableau {
            rows: if m == 0 {
                Vec::new()
            } else {
                vec![vec![Vec::new(); m]]
            },
        }
    }

    pub fn rows(&self) -> &[Vec<CellLabel>] {
        &self.rows
    }

    pub fn shape(&self) -> IntegerPartition {
        IntegerPartition::new(self.rows.iter().map(Vec::len).collect())
            .expect("rows weakly decrease")
    }

    pub fn total_cells(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Full validity for content `{0^(2k-t), 1, .., k}`: blank cells form a
    /// prefix of row 1 only, the nonempty labels are pairwise disjoint with
    /// union `{1..k}`, and rows and columns strictly increase in last-letter
    /// order.
    pub fn validate_content(&self, k: usize) -> Result<(), BijectionError> {
        let mut seen = vec![false; k + 1];
        for (r, row) in self.rows.iter().enumerate() {
            let mut in_prefix = r == 0;
            for (c, label) in row.iter().enumerate() {
                if label.is_empty() {
                    if !in_prefix {
                        return Err(bad("blank cell outside the first-row prefix"));
                    }
                } else {
                    in_prefix = false;
                    for &v in label {
                        if v == 0 || v > k || seen[v] {
                            return Err(bad(format!("label entry {v} repeated or out of range")));
                        }
                        seen[v] = true;
                    }
                }
                if c > 0
                    && !label.is_empty()
                    && lastletter_cmp(&row[c - 1], label) != Ordering::Less
                {
                    return Err(bad("row not strictly increasing"));
                }
                if r > 0 && lastletter_cmp(&self.rows[r - 1][c], label) != Ordering::Less {
                    return Err(bad("column not strictly increasing"));
                }
            }
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(bad("labels do not cover 1..k"));
        }
        Ok(())
    }

    /// Schensted row insertion of a label, starting at the bottom row: the
    /// incoming label bumps the leftmost strictly greater cell, the bumped
    /// label recurses into the row above, and an unbumped label lands at the
    /// end of its row.
    pub fn schensted_insert(&self, label: CellLabel) -> Self {
        let mut rows = self.rows.clone();
        let mut carry = label;
        let mut r = 0;
        loop {
            if r == rows.len() {
                rows.push(vec![carry]);
                break;
            }
            match rows[r]
                .iter()
                .position(|cell| lastletter_cmp(cell, &carry) == Ordering::Greater)
            {
                None => {
                    rows[r].push(carry);
                    break;
                }
                Some(c) => {
                    carry = std::mem::replace(&mut rows[r][c], carry);
                    r += 1;
                }
            }
        }
        SetPartitionTableau { rows }
    }

    /// Inverse of [`SetPartitionTableau::schensted_insert`], unbumping from a
    /// removable corner; returns the reduced tableau and the extracted label.
    pub fn schensted_uninsert(
        &self,
        corner: (usize, usize),
    ) -> Result<(Self, CellLabel), BijectionError> {
        let (r0, c0) = corner;
        if r0 >= self.rows.len() || c0 + 1 != self.rows[r0].len() {
            return Err(bad("not a removable corner"));
        }
        if r0 + 1 < self.rows.len() && self.rows[r0 + 1].len() > c0 {
            return Err(bad("not a removable corner"));
        }
        let mut rows = self.rows.clone();
        let mut carry = rows[r0].pop().expect("corner exists");
        if rows[r0].is_empty() {
            rows.pop();
        }
        for r in (0..r0).rev() {
            let c = rows[r]
                .iter()
                .rposition(|cell| lastletter_cmp(cell, &carry) == Ordering::Less)
                .ok_or_else(|| bad("reverse bump found no smaller cell"))?;
            carry = std::mem::replace(&mut rows[r][c], carry);
        }
        Ok((SetPartitionTableau { rows }, carry))
    }

    /// Removes a removable corner cell outright, returning its label. Unlike
    /// [`SetPartitionTableau::schensted_uninsert`] no reverse bumping occurs.
    fn remove_corner(&self, corner: (usize, usize)) -> Result<(Self, CellLabel), BijectionError> {
        let (r, c) = corner;
        if r >= self.rows.len() || c + 1 != self.rows[r].len() {
            return Err(bad("not a removable corner"));
        }
        if r + 1 < self.rows.len() && self.rows[r + 1].len() > c {
            return Err(bad("not a removable corner"));
        }
        let mut rows = self.rows.clone();
        let label = rows[r].pop().expect("corner exists");
        if rows[r].is_empty() {
            rows.pop();
        }
        Ok((SetPartitionTableau { rows }, label))
    }

    /// Places a label at an addable corner (used by the inverse insertion
    /// bijection).
    fn place_at(&self, cell: (usize, usize), label: CellLabel) -> Result<Self, BijectionError> {
        let (r, c) = cell;
        let mut rows = self.rows.clone();
        if r > rows.len() {
            return Err(bad("cell is not an addable corner"));
        }
        if r == rows.len() {
            if c != 0 {
                return Err(bad("cell is not an addable corner"));
            }
            rows.push(vec![label]);
        } else {
            if rows[r].len() != c || (r > 0 && rows[r - 1].len() <= c) {
                return Err(bad("cell is not an addable corner"));
            }
            rows[r].push(label);
        }
        Ok(SetPartitionTableau { rows })
    }

    /// JSON form `{"shape": [3,1], "rows": [[[],[],[]],[[1,2]]]}` with row 1
    /// first.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "shape": self.shape().parts(), "rows": self.rows })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, BijectionError> {
        let rows = v
            .get("rows")
            .and_then(|r| r.as_array())
            .ok_or_else(|| bad("missing rows"))?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| bad("row is not an array"))?
                    .iter()
                    .map(|cell| {
                        cell.as_array()
                            .ok_or_else(|| bad("cell is not an array"))?
                            .iter()
                            .map(|x| {
                                x.as_u64().map(|x| x as usize).ok_or_else(|| bad("bad label"))
                            })
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        SetPartitionTableau::new(rows)
    }
}

impl fmt::Debug for SetPartitionTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SPT{:?}", self.rows)
    }
}

/// A vacillating tableau in the padded form: each entry of the underlying
/// path gains a large first part so that the sizes follow
/// `eta - correction(i)` for the 1-based entry index `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BhVacillatingTableau {
    entries: Vec<IntegerPartition>,
}

impl BhVacillatingTableau {
    pub fn entries(&self) -> &[IntegerPartition] {
        &self.entries
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self
            .entries
            .iter()
            .map(|p| p.parts().to_vec())
            .collect::<Vec<_>>())
    }
}

impl fmt::Debug for BhVacillatingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<_> = self.entries.iter().map(|p| format!("{p}")).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The parity correction `(1 + (-1)^i)/2` for the 1-based entry index.
fn parity_correction(i: usize) -> usize {
    if i.is_multiple_of(2) {
        1
    } else {
        0
    }
}

/// Pads a path: entry `i` (1-based) becomes
/// `(eta - |P_i| - (1+(-1)^i)/2) . P_i`.
pub fn hr_to_bh(
    p: &VacillatingTableau,
    eta: usize,
) -> Result<BhVacillatingTableau, BijectionError> {
    let mut entries = Vec::with_capacity(p.len());
    for (idx, part) in p.entries().iter().enumerate() {
        let i = idx + 1;
        let first = eta
            .checked_sub(part.size() + parity_correction(i))
            .ok_or_else(|| bad("eta too small to pad"))?;
        if part.parts().first().is_some_and(|&top| first < top) {
            return Err(bad("padded first part must stay weakly dominant"));
        }
        let mut parts = vec![first];
        parts.extend_from_slice(part.parts());
        entries.push(IntegerPartition::new(parts).map_err(|_| bad("padding broke the shape"))?);
    }
    Ok(BhVacillatingTableau { entries })
}

/// Strips the first part of every entry, recovering the underlying path.
pub fn bh_to_hr(b: &BhVacillatingTableau) -> Result<VacillatingTableau, BijectionError> {
    let entries = b
        .entries
        .iter()
        .map(|p| {
            IntegerPartition::new(p.parts().get(1..).unwrap_or(&[]).to_vec())
                .map_err(|_| bad("stripped entry is not a partition"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    VacillatingTableau::new(entries).map_err(|_| bad("stripped sequence is not a path"))
}

/// The insertion bijection from set-partition tableaux with `2k` cells and
/// content `{0^(2k-t), 1, .., k}` to padded vacillating tableaux. Working
/// down from the largest letter, the cell containing `j` (always a corner) is
/// removed, `j` is deleted from its label, and the remainder is reinserted by
/// Schensted insertion; the recorded shapes, read in reverse, form the image.
pub fn bh_forward(t: &SetPartitionTableau) -> Result<BhVacillatingTableau, BijectionError> {
    let cells = t.total_cells();
    if !cells.is_multiple_of(2) {
        return Err(bad("tableau must have an even number of cells"));
    }
    let k = cells / 2;
    t.validate_content(k)?;
    let mut shapes = vec![t.shape()];
    let mut current = t.clone();
    for j in (1..=k).rev() {
        let pos = current
            .rows
            .iter()
            .enumerate()
            .find_map(|(r, row)| {
                row.iter()
                    .position(|cell| cell.contains(&j))
                    .map(|c| (r, c))
            })
            .ok_or_else(|| bad(format!("no cell contains {j}")))?;
        // The largest remaining letter always sits at a removable corner.
        let (without, mut label) = current
            .remove_corner(pos)
            .map_err(|_| bad(format!("cell containing {j} is not a removable corner")))?;
        debug_assert_eq!(label.last(), Some(&j));
        shapes.push(without.shape());
        label.pop();
        current = without.schensted_insert(label);
        shapes.push(current.shape());
    }
    shapes.reverse();
    Ok(BhVacillatingTableau { entries: shapes })
}

/// Inverse of [`bh_forward`]: rebuilds the tableau from the shape sequence by
/// reversing each insertion.
pub fn bh_inverse(b: &BhVacillatingTableau) -> Result<SetPartitionTableau, BijectionError> {
    let len = b.entries.len();
    if len.is_multiple_of(2) || len < 1 {
        return Err(bad("entry count must be odd"));
    }
    let k = (len - 1) / 2;
    let eta = 2 * k;
    if b.entries[0] != IntegerPartition::single_row(eta) {
        return Err(bad("sequence must start at a single row of 2k cells"));
    }
    let mut current = SetPartitionTableau::blank_row(eta);
    for j in 1..=k {
        let lam_prev = &b.entries[2 * j - 2];
        let lam_half = &b.entries[2 * j - 1];
        let lam_full = &b.entries[2 * j];
        let corner = lam_half
            .added_box(lam_prev)
            .ok_or_else(|| bad("half step does not remove one box"))?;
        let (reduced, mut label) = current.schensted_uninsert(corner)?;
        label.push(j);
        let cell = lam_half
            .added_box(lam_full)
            .ok_or_else(|| bad("full step does not add one box"))?;
        current = reduced.place_at(cell, label)?;
    }
    current.validate_content(k)?;
    Ok(current)
}

/// The two set-partition tableaux associated with a partition diagram by the
/// RSK correspondence for diagrams.
///
/// Propagating blocks, sorted by their top part in last-letter order, form a
/// generalized permutation whose bottom parts are inserted (building the
/// second tableau) while the top parts record (building the first). Rows made
/// from the non-propagating top (resp. bottom) labels, padded on the left
/// with blank cells to a total of `2k` cells, are placed underneath.
pub fn diagram_rsk(d: &PartitionDiagram) -> (SetPartitionTableau, SetPartitionTableau) {
    let k = d.order();
    let mut propagating: Vec<(CellLabel, CellLabel)> = Vec::new();
    let mut top_only: Vec<CellLabel> = Vec::new();
    let mut bottom_only: Vec<CellLabel> = Vec::new();
    for block in d.blocks() {
        let top: CellLabel = block
            .iter()
            .filter(|&&v| v > 0)
            .map(|&v| v as usize)
            .collect();
        let bottom: CellLabel = block
            .iter()
            .filter(|&&v| v < 0)
            .map(|&v| (-v) as usize)
            .collect();
        match (top.is_empty(), bottom.is_empty()) {
            (false, false) => propagating.push((top, bottom)),
            (false, true) => top_only.push(top),
            (true, false) => bottom_only.push(bottom),
            (true, true) => unreachable!("blocks are nonempty"),
        }
    }
    propagating.sort_by(|a, b| lastletter_cmp(&a.0, &b.0));
    top_only.sort_by(lastletter_cmp);
    bottom_only.sort_by(lastletter_cmp);

    let mut insertion = SetPartitionTableau::empty();
    let mut recording_rows: Vec<Vec<CellLabel>> = Vec::new();
    for (top, bottom) in &propagating {
        let before = insertion.shape();
        insertion = insertion.schensted_insert(bottom.clone());
        let (r, _) = before
            .added_box(&insertion.shape())
            .expect("insertion adds one box");
        if r == recording_rows.len() {
            recording_rows.push(Vec::new());
        }
        recording_rows[r].push(top.clone());
    }
    let assemble = |core_rows: &[Vec<CellLabel>], extras: &[CellLabel]| {
        let core_cells: usize = core_rows.iter().map(Vec::len).sum();
        let pad = 2 * k - core_cells - extras.len();
        let mut first = vec![CellLabel::new(); pad];
        first.extend(extras.iter().cloned());
        let mut rows = vec![first];
        rows.extend(core_rows.iter().cloned());
        SetPartitionTableau::new(rows).expect("assembled rows form a shape")
    };
    (
        assemble(&recording_rows, &top_only),
        assemble(insertion.rows(), &bottom_only),
    )
}

/// Inverse of [`diagram_rsk`]: recovers the diagram from an equal-shape pair
/// of valid set-partition tableaux.
pub fn diagram_rsk_inverse(
    t1: &SetPartitionTableau,
    t2: &SetPartitionTableau,
) -> Result<PartitionDiagram, BijectionError> {
    if t1.shape() != t2.shape() {
        return Err(BijectionError::ShapeMismatch);
    }
    let cells = t1.total_cells();
    if !cells.is_multiple_of(2) || cells == 0 {
        return Err(bad("pair must have 2k cells"));
    }
    let k = cells / 2;
    t1.validate_content(k)?;
    t2.validate_content(k)?;

    let split = |t: &SetPartitionTableau| -> (Vec<CellLabel>, SetPartitionTableau) {
        let extras: Vec<CellLabel> = t.rows()[0]
            .iter()
            .filter(|c| !c.is_empty())
            .cloned()
            .collect();
        let core = SetPartitionTableau {
            rows: t.rows()[1..].to_vec(),
        };
        (extras, core)
    };
    let (top_only, mut recording) = split(t1);
    let (bottom_only, mut insertion) = split(t2);
    if recording.shape() != insertion.shape() {
        return Err(BijectionError::ShapeMismatch);
    }

    let mut blocks: Vec<Vec<i32>> = Vec::new();
    while recording.total_cells() > 0 {
        // The most recent insertion recorded the largest remaining top part.
        let (mut r, mut c, mut best) = (0usize, 0usize, &CellLabel::new());
        for (ri, row) in recording.rows.iter().enumerate() {
            for (ci, cell) in row.iter().enumerate() {
                if lastletter_cmp(cell, best) == Ordering::Greater {
                    (r, c, best) = (ri, ci, cell);
                }
            }
        }
        let top = recording.rows[r][c].clone();
        if recording.rows[r].len() != c + 1 {
            return Err(bad("recording maximum is not at a corner"));
        }
        recording.rows[r].pop();
        if recording.rows[r].is_empty() {
            recording.rows.pop();
        }
        let (reduced, bottom) = insertion.schensted_uninsert((r, c))?;
        insertion = reduced;
        let mut block: Vec<i32> = top.iter().map(|&v| v as i32).collect();
        block.extend(bottom.iter().map(|&v| -(v as i32)));
        blocks.push(block);
    }
    blocks.extend(
        top_only
            .iter()
            .map(|l| l.iter().map(|&v| v as i32).collect::<Vec<_>>()),
    );
    blocks.extend(
        bottom_only
            .iter()
            .map(|l| l.iter().map(|&v| -(v as i32)).collect::<Vec<_>>()),
    );
    PartitionDiagram::new(k, blocks).map_err(|e| bad(format!("blocks do not assemble: {e}")))
}

/// All set-partition tableaux with `2k` cells and content
/// `{0^(2k-t), 1, .., k}`, in the order induced by the path enumeration (by
/// final vertex, then path order).
pub fn enumerate_spt(k: usize) -> Result<Vec<SetPartitionTableau>, BijectionError> {
    let level = Level::integer(k);
    let mut out = Vec::new();
    for mu in crate::bratteli::vertices(level) {
        for p in enumerate_vt(level, &mu).map_err(|_| bad("bad vertex"))? {
            let padded = hr_to_bh(&p, 2 * k)?;
            out.push(bh_inverse(&padded)?);
        }
    }
    Ok(out)
}
