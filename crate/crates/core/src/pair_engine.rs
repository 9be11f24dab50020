//! Two spheres: decision, inductive construction and certificate checking.
//!
//! A pair `(x, y)` of equal-length tree-like sequences is realized by
//! induction on `n`. Both sequences are put in units-last order, the roles
//! are swapped if needed so that `x_1 >= y_1`, and the pair is reduced to
//!
//! ```text
//! x' = (x_1 - y_1 + 1, x_2, ..., x_{n - y_1 + 1})
//! y' = (y_2, ..., y_{n - y_1 + 2})
//! ```
//!
//! which has length `n - y_1 + 1`. A certificate for `(x', y')` is then
//! grown back with `y_1 - 1` fingers pushed from the component `C` next to
//! the marked circle on one sphere through the disk `D` next to it on the
//! other. Each finger adds one circle; in the dual trees it hangs a new leaf
//! off `C` and off `D`.
//!
//! A certificate only records the two dual trees over a shared circle set.
//! It is a consistency witness for the construction, not a proof that an
//! arbitrary pair of trees embeds in 3-space.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::dualtree::{check_numbering, to_dot, CircleId, Numbering, RegionId, RegionTree};
use crate::error::{Error, Result, Verdict};
use crate::seqcore::DegreeSequence;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCertificate {
    pub n: usize,
    pub circles: Vec<CircleId>,
    /// Dual tree of the first sphere (degrees `x`).
    pub tree_s: RegionTree,
    /// Dual tree of the second sphere (degrees `y`).
    pub tree_t: RegionTree,
    pub numbering_s: Numbering,
    pub numbering_t: Numbering,
    /// A circle bounding a disk and an `x_1`-component in S, and a disk and
    /// a `y_1`-component in T.
    pub marked: CircleId,
    pub x: DegreeSequence,
    pub y: DegreeSequence,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub trace: Vec<TraceStep>,
}

/// One level of the induction, outermost first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub x: DegreeSequence,
    pub y: DegreeSequence,
    /// Roles were exchanged at this level because `x_1 < y_1`.
    pub swapped: bool,
    pub fingers: i64,
}

/// Why a pair of sequences cannot be realized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairFailure {
    LengthMismatch,
    XNotTreeLike,
    YNotTreeLike,
}

impl PairFailure {
    pub fn as_str(&self) -> &'static str {
        match self {
            PairFailure::LengthMismatch => "length",
            PairFailure::XNotTreeLike => "x_not_tree_like",
            PairFailure::YNotTreeLike => "y_not_tree_like",
        }
    }
}

pub fn pair_failure(x: &DegreeSequence, y: &DegreeSequence) -> Option<PairFailure> {
    if x.len() != y.len() {
        Some(PairFailure::LengthMismatch)
    } else if !x.is_tree_like() {
        Some(PairFailure::XNotTreeLike)
    } else if !y.is_tree_like() {
        Some(PairFailure::YNotTreeLike)
    } else {
        None
    }
}

/// Realizable iff both sequences have the same length and are tree-like.
pub fn decide_pair(x: &DegreeSequence, y: &DegreeSequence) -> bool {
    pair_failure(x, y).is_none()
}

/// The reduction step. Both inputs must be tree-like, units-last, of equal
/// length, with `x_1 >= y_1 >= 2`.
pub fn lemma1_reduce(
    x: &DegreeSequence,
    y: &DegreeSequence,
) -> Result<(DegreeSequence, DegreeSequence)> {
    if x.len() != y.len() {
        return Err(Error::Precondition("sequences differ in length".into()));
    }
    if !x.is_tree_like() || !y.is_tree_like() {
        return Err(Error::Precondition("both sequences must be tree-like".into()));
    }
    if !x.units_last() || !y.units_last() {
        return Err(Error::Precondition("units must come last in both sequences".into()));
    }
    let (x1, y1) = (x.head(), y.head());
    if y1 < 2 {
        return Err(Error::Precondition("y_1 = 1 is the base case (n = 2)".into()));
    }
    if x1 < y1 {
        return Err(Error::SwapRequired);
    }
    let n = x.len();
    let keep = n - y1 as usize + 1;
    let xs = x.entries();
    let ys = y.entries();
    if xs[keep..].iter().chain(&ys[keep + 1..]).any(|&v| v != 1) {
        return Err(Error::Internal("reduction dropped an entry greater than 1".into()));
    }
    let mut reduced_x = xs[..keep].to_vec();
    reduced_x[0] = x1 - y1 + 1;
    let reduced_y = ys[1..=keep].to_vec();
    Ok((DegreeSequence::new(reduced_x)?, DegreeSequence::new(reduced_y)?))
}

/// Condition (2) for one tree: `marked` separates a disk from a component
/// with `head` neighbors. With `head = 1` the disk itself qualifies.
pub fn marked_condition_holds(tree: &RegionTree, marked: CircleId, head: i64) -> bool {
    head_endpoint(tree, marked, head).is_some()
}

/// The endpoint of `marked` that plays the `head`-neighbor component.
fn head_endpoint(tree: &RegionTree, marked: CircleId, head: i64) -> Option<RegionId> {
    let e = tree.edge(marked)?;
    let (da, db) = (tree.degree(e.a) as i64, tree.degree(e.b) as i64);
    if head == 1 {
        [(e.a, da), (e.b, db)].into_iter().find(|&(_, d)| d == 1).map(|(r, _)| r)
    } else if db == 1 && da == head {
        Some(e.a)
    } else if da == 1 && db == head {
        Some(e.b)
    } else {
        None
    }
}

fn next_circle(cert: &PairCertificate) -> u32 {
    cert.circles.iter().map(|c| c.0 + 1).max().unwrap_or(1)
}

fn remove_one(v: &[i64], value: i64) -> Option<Vec<i64>> {
    let i = v.iter().position(|&e| e == value)?;
    let mut out = v.to_vec();
    out.remove(i);
    Some(out)
}

/// A numbering of `tree` with degrees `target`, keeping `pinned` at index 1.
/// Other positions take the unused region of the right degree with the
/// smallest id.
fn renumber(tree: &RegionTree, target: &[i64], pinned: RegionId) -> Result<Numbering> {
    let deg = tree.degrees();
    if deg.get(&pinned).map(|&d| d as i64) != Some(target[0]) {
        return Err(Error::Internal("pinned region has the wrong degree".into()));
    }
    let mut buckets: BTreeMap<i64, VecDeque<RegionId>> = BTreeMap::new();
    for (&r, &d) in &deg {
        if r != pinned {
            buckets.entry(d as i64).or_default().push_back(r);
        }
    }
    let mut numbering = Vec::with_capacity(target.len());
    numbering.push(pinned);
    for &t in &target[1..] {
        let r = buckets
            .get_mut(&t)
            .and_then(|b| b.pop_front())
            .ok_or_else(|| Error::Internal("degree multiset mismatch while renumbering".into()))?;
        numbering.push(r);
    }
    Ok(numbering)
}

/// Puts the region playing the head role for `marked` at index 1.
fn pin_head(tree: &RegionTree, numbering: &mut Numbering, marked: CircleId, head: i64) -> Result<()> {
    let e = head_endpoint(tree, marked, head)
        .ok_or_else(|| Error::Internal("marked circle lost its head component".into()))?;
    let k = numbering
        .iter()
        .position(|&r| r == e)
        .ok_or_else(|| Error::Internal("head region missing from numbering".into()))?;
    if tree.degree(numbering[0]) != tree.degree(e) {
        return Err(Error::Internal("index 1 has the wrong degree".into()));
    }
    numbering.swap(0, k);
    Ok(())
}

/// The certificate for `(1, 1), (1, 1)`: one circle, two disks on each side.
pub fn base_certificate() -> PairCertificate {
    let c = CircleId(1);
    let tree = RegionTree::single_edge(RegionId(0), RegionId(1), c);
    let one_one = DegreeSequence::new(vec![1, 1]).expect("valid");
    PairCertificate {
        n: 2,
        circles: vec![c],
        numbering_s: tree.regions.clone(),
        numbering_t: tree.regions.clone(),
        tree_s: tree.clone(),
        tree_t: tree,
        marked: c,
        x: one_one.clone(),
        y: one_one,
        trace: Vec::new(),
    }
}

/// Pushes `y1 - 1` fingers from the S-side component next to the marked
/// circle (degree `x1 - y1 + 1`) through the T-side disk next to it.
///
/// The result certifies `(x1, rest of x'..., 1, ..., 1)` and
/// `(y1, rest of y'..., 1, ..., 1)`, with `C` numbered 1 in S, `D` numbered
/// 1 in T, and the first new circle marked.
pub fn finger_move(cert: &PairCertificate, x1: i64, y1: i64) -> Result<PairCertificate> {
    if y1 < 2 || x1 < y1 {
        return Err(Error::Precondition(format!(
            "finger move needs x1 >= y1 >= 2, got x1 = {x1}, y1 = {y1}"
        )));
    }
    let c_deg = x1 - y1 + 1;
    let c = head_endpoint(&cert.tree_s, cert.marked, c_deg).ok_or_else(|| {
        Error::InvalidCertificate(format!(
            "marked circle {} does not separate a disk from a component of degree {c_deg} in S",
            cert.marked.0
        ))
    })?;
    let d = head_endpoint(&cert.tree_t, cert.marked, 1).ok_or_else(|| {
        Error::InvalidCertificate(format!(
            "marked circle {} does not bound a disk in T",
            cert.marked.0
        ))
    })?;

    let mut tree_s = cert.tree_s.clone();
    let mut tree_t = cert.tree_t.clone();
    let mut circles = cert.circles.clone();
    let first = next_circle(cert);
    for k in 0..(y1 - 1) as u32 {
        let id = CircleId(first + k);
        let leaf_s = tree_s.fresh_region();
        tree_s.add_edge(id, c, leaf_s);
        let leaf_t = tree_t.fresh_region();
        tree_t.add_edge(id, d, leaf_t);
        circles.push(id);
    }

    let bad_seq = || Error::InvalidCertificate("certificate sequences do not match its trees".into());
    let fresh_units = std::iter::repeat_n(1, (y1 - 1) as usize);
    let x: Vec<i64> = std::iter::once(x1)
        .chain(remove_one(cert.x.entries(), c_deg).ok_or_else(bad_seq)?)
        .chain(fresh_units.clone())
        .collect();
    let y: Vec<i64> = std::iter::once(y1)
        .chain(remove_one(cert.y.entries(), 1).ok_or_else(bad_seq)?)
        .chain(fresh_units)
        .collect();

    let numbering_s = renumber(&tree_s, &x, c)?;
    let numbering_t = renumber(&tree_t, &y, d)?;
    let n = cert.n + (y1 - 1) as usize;
    // Each new circle splits one component in two on both spheres.
    if circles.len() + 1 != n || tree_s.regions.len() != n || tree_t.regions.len() != n {
        return Err(Error::Internal(format!(
            "{} circles but {} / {} components after finger move",
            circles.len(),
            tree_s.regions.len(),
            tree_t.regions.len()
        )));
    }
    Ok(PairCertificate {
        n,
        circles,
        tree_s,
        tree_t,
        numbering_s,
        numbering_t,
        marked: CircleId(first),
        x: DegreeSequence::new(x)?,
        y: DegreeSequence::new(y)?,
        trace: cert.trace.clone(),
    })
}

impl PairCertificate {
    /// Exchanges the roles of the two spheres.
    pub fn swapped(self) -> Self {
        Self {
            tree_s: self.tree_t,
            tree_t: self.tree_s,
            numbering_s: self.numbering_t,
            numbering_t: self.numbering_s,
            x: self.y,
            y: self.x,
            ..self
        }
    }

    /// True when the regions numbered 1 in both trees lie on the marked
    /// circle. These are the attachment sites for connected sums.
    pub fn marked_touches_heads(&self) -> bool {
        let touches = |tree: &RegionTree, num: &Numbering| {
            num.first()
                .zip(tree.edge(self.marked))
                .is_some_and(|(&r, e)| e.touches(r))
        };
        touches(&self.tree_s, &self.numbering_s) && touches(&self.tree_t, &self.numbering_t)
    }

    /// Graphviz text for the two dual trees, marked circle highlighted.
    pub fn to_dot(&self) -> Result<(String, String)> {
        Ok((
            to_dot(&self.tree_s, &self.numbering_s, "F", "f", Some(self.marked))?,
            to_dot(&self.tree_t, &self.numbering_t, "G", "g", Some(self.marked))?,
        ))
    }
}

fn realize_normalized(x: &DegreeSequence, y: &DegreeSequence) -> Result<PairCertificate> {
    if x.len() == 2 {
        return Ok(base_certificate());
    }
    if x.head() < y.head() {
        let mut cert = realize_normalized(y, x)?.swapped();
        if let Some(step) = cert.trace.first_mut() {
            step.swapped = true;
        }
        return Ok(cert);
    }
    let (rx, ry) = lemma1_reduce(x, y)?;
    let (rx, _) = rx.normalize_units_last();
    debug_assert!(ry.units_last());
    let sub = realize_normalized(&rx, &ry)?;
    let mut cert = finger_move(&sub, x.head(), y.head())?;
    cert.numbering_s = renumber(&cert.tree_s, x.entries(), cert.numbering_s[0])?;
    cert.numbering_t = renumber(&cert.tree_t, y.entries(), cert.numbering_t[0])?;
    cert.x = x.clone();
    cert.y = y.clone();
    cert.trace.insert(
        0,
        TraceStep {
            x: x.clone(),
            y: y.clone(),
            swapped: false,
            fingers: y.head() - 1,
        },
    );
    Ok(cert)
}

/// Builds a strong-realization certificate for `(x, y)` in the caller's
/// numbering. The regions numbered 1 always lie on the marked circle.
pub fn realize_pair(x: &DegreeSequence, y: &DegreeSequence) -> Result<PairCertificate> {
    if let Some(f) = pair_failure(x, y) {
        return Err(Error::Unrealizable(format!("{x} / {y}: {}", f.as_str())));
    }
    let (nx, px) = x.normalize_units_last();
    let (ny, py) = y.normalize_units_last();
    let mut cert = realize_normalized(&nx, &ny)?;

    let unpermute = |num: &Numbering, perm: &[usize]| {
        let mut out = num.clone();
        for (j, &orig) in perm.iter().enumerate() {
            out[orig] = num[j];
        }
        out
    };
    cert.numbering_s = unpermute(&cert.numbering_s, &px);
    cert.numbering_t = unpermute(&cert.numbering_t, &py);
    cert.x = x.clone();
    cert.y = y.clone();
    pin_head(&cert.tree_s, &mut cert.numbering_s, cert.marked, x.head())?;
    pin_head(&cert.tree_t, &mut cert.numbering_t, cert.marked, y.head())?;

    let verdict = verify_pair_certificate(&cert, x, y);
    if !verdict.is_valid() {
        return Err(Error::Internal(format!(
            "engine produced an invalid certificate: {}",
            verdict.problems.join("; ")
        )));
    }
    Ok(cert)
}

/// Checks a certificate against `(x, y)`. Never panics on malformed input.
pub fn verify_pair_certificate(cert: &PairCertificate, x: &DegreeSequence, y: &DegreeSequence) -> Verdict {
    let mut v = Verdict::default();
    let n = x.len();
    if y.len() != n || cert.n != n || n < 2 {
        v.fail(format!(
            "lengths disagree: n = {}, |x| = {}, |y| = {}",
            cert.n,
            x.len(),
            y.len()
        ));
        return v;
    }
    v.check(&cert.x == x && &cert.y == y, || {
        format!("certificate claims {} / {}", cert.x, cert.y)
    });
    let circles: BTreeSet<CircleId> = cert.circles.iter().copied().collect();
    v.check(circles.len() == cert.circles.len(), || "duplicate circle id".into());
    v.check(cert.circles.len() == n - 1, || {
        format!("{} circles, expected n - 1 = {}", cert.circles.len(), n - 1)
    });
    v.check(circles.contains(&cert.marked), || {
        format!("marked circle {} is not in the circle set", cert.marked.0)
    });

    for (side, tree, numbering, seq) in [
        ("S", &cert.tree_s, &cert.numbering_s, x),
        ("T", &cert.tree_t, &cert.numbering_t, y),
    ] {
        if let Err(e) = tree.validate() {
            v.fail(format!("tree {side}: {e}"));
            continue;
        }
        v.check(tree.circles() == circles, || {
            format!("tree {side} is labeled by a different circle set")
        });
        if let Err(e) = check_numbering(tree, numbering) {
            v.fail(format!("tree {side}: {e}"));
            continue;
        }
        let deg = tree.degrees();
        let got: Vec<i64> = numbering.iter().map(|r| deg[r] as i64).collect();
        v.check(got == seq.entries(), || {
            format!("tree {side} has degrees {got:?}, expected {seq}")
        });
        v.check(marked_condition_holds(tree, cert.marked, seq.head()), || {
            format!(
                "tree {side}: marked circle {} does not separate a disk from a component with {} neighbors",
                cert.marked.0,
                seq.head()
            )
        });
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dualtree::degree_sequence_of_tree;
    use crate::seqcore::seq;

    fn sorted_degrees(t: &RegionTree) -> Vec<usize> {
        let mut d: Vec<usize> = t.degrees().into_values().collect();
        d.sort();
        d
    }

    fn is_star(t: &RegionTree) -> bool {
        sorted_degrees(t).last() == Some(&(t.regions.len() - 1))
    }

    fn is_path(t: &RegionTree) -> bool {
        sorted_degrees(t).iter().all(|&d| d <= 2)
    }

    #[test]
    fn decide_examples() {
        assert!(decide_pair(&seq(&[3, 1, 1, 1]), &seq(&[2, 2, 1, 1])));
        assert!(decide_pair(&seq(&[1, 1]), &seq(&[1, 1])));
        assert!(!decide_pair(&seq(&[2, 1, 1]), &seq(&[1, 1])));
        assert_eq!(
            pair_failure(&seq(&[2, 2, 1]), &seq(&[2, 1, 1])),
            Some(PairFailure::XNotTreeLike)
        );
    }

    #[test]
    fn reduce_examples() {
        let r = lemma1_reduce(&seq(&[3, 1, 1, 1]), &seq(&[2, 2, 1, 1])).unwrap();
        assert_eq!(r, (seq(&[2, 1, 1]), seq(&[2, 1, 1])));
        let r = lemma1_reduce(&seq(&[2, 1, 1]), &seq(&[2, 1, 1])).unwrap();
        assert_eq!(r, (seq(&[1, 1]), seq(&[1, 1])));
        let r = lemma1_reduce(&seq(&[2, 2, 1, 1]), &seq(&[2, 2, 1, 1])).unwrap();
        assert_eq!(r, (seq(&[1, 2, 1]), seq(&[2, 1, 1])));
    }

    #[test]
    fn reduce_errors() {
        assert_eq!(
            lemma1_reduce(&seq(&[2, 2, 1, 1]), &seq(&[3, 1, 1, 1])),
            Err(Error::SwapRequired)
        );
        assert!(matches!(
            lemma1_reduce(&seq(&[1, 3, 1, 1]), &seq(&[2, 2, 1, 1])),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            lemma1_reduce(&seq(&[1, 1]), &seq(&[1, 1])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn single_finger_from_base() {
        let cert = finger_move(&base_certificate(), 2, 2).unwrap();
        assert_eq!((&cert.x, &cert.y), (&seq(&[2, 1, 1]), &seq(&[2, 1, 1])));
        assert!(is_path(&cert.tree_s) && is_path(&cert.tree_t));
        assert_eq!(cert.circles.len(), 2);
        assert!(verify_pair_certificate(&cert, &cert.x, &cert.y).is_valid());
    }

    #[test]
    fn finger_reaches_figure_instance() {
        let c2 = finger_move(&base_certificate(), 2, 2).unwrap();
        let c3 = finger_move(&c2, 3, 2).unwrap();
        assert_eq!(c3.x, seq(&[3, 1, 1, 1]));
        assert_eq!(c3.y, seq(&[2, 2, 1, 1]));
        assert!(is_star(&c3.tree_s));
        assert!(is_path(&c3.tree_t));
        assert_eq!(c3.circles.len(), c2.circles.len() + 1);
        assert_eq!(c3.marked, CircleId(3));
        assert!(verify_pair_certificate(&c3, &c3.x, &c3.y).is_valid());
    }

    #[test]
    fn finger_rejects_bad_marked_circle() {
        let mut cert = finger_move(&base_certificate(), 2, 2).unwrap();
        // Circle 1 separates the middle region from a leaf in S but the
        // required component degree for (4, 2) is 3.
        cert.marked = CircleId(1);
        assert!(matches!(finger_move(&cert, 4, 2), Err(Error::InvalidCertificate(_))));
        assert!(matches!(finger_move(&cert, 2, 3), Err(Error::Precondition(_))));
    }

    #[test]
    fn realize_examples() {
        let c = realize_pair(&seq(&[1, 1]), &seq(&[1, 1])).unwrap();
        assert_eq!(c, base_certificate());

        let x = seq(&[3, 1, 1, 1]);
        let y = seq(&[2, 2, 1, 1]);
        let c = realize_pair(&x, &y).unwrap();
        assert_eq!(c.circles.len(), 3);
        assert!(is_star(&c.tree_s) && is_path(&c.tree_t));
        assert_eq!(degree_sequence_of_tree(&c.tree_s, &c.numbering_s).unwrap(), x);
        assert_eq!(degree_sequence_of_tree(&c.tree_t, &c.numbering_t).unwrap(), y);

        let x = seq(&[2, 2, 1, 1]);
        let c = realize_pair(&x, &x).unwrap();
        assert!(verify_pair_certificate(&c, &x, &x).is_valid());
    }

    #[test]
    fn realize_keeps_caller_order() {
        let x = seq(&[1, 2, 1, 3, 2, 1]);
        let y = seq(&[1, 1, 4, 1, 2, 1]);
        let c = realize_pair(&x, &y).unwrap();
        assert!(verify_pair_certificate(&c, &x, &y).is_valid());
        assert!(c.marked_touches_heads());
        assert!(c.trace.iter().any(|s| s.swapped));
    }

    #[test]
    fn realize_rejects_undecidable() {
        assert!(matches!(
            realize_pair(&seq(&[2, 1, 1]), &seq(&[1, 1])),
            Err(Error::Unrealizable(_))
        ));
        assert!(realize_pair(&seq(&[2, 2]), &seq(&[2, 2])).is_err());
    }

    #[test]
    fn verifier_catches_tampering() {
        let x = seq(&[3, 1, 1, 1]);
        let y = seq(&[2, 2, 1, 1]);
        let good = realize_pair(&x, &y).unwrap();

        let mut c = good.clone();
        c.tree_t.edges[0].circle = CircleId(99);
        assert!(!verify_pair_certificate(&c, &x, &y).is_valid());

        let mut c = good.clone();
        let leaf = (1..4).find(|&i| c.tree_s.degree(c.numbering_s[i]) == 1).unwrap();
        c.numbering_s.swap(0, leaf);
        assert!(!verify_pair_certificate(&c, &x, &y).is_valid());

        // Garbage must not panic.
        let mut c = good.clone();
        c.numbering_t = vec![RegionId(42); 4];
        c.tree_s.edges[1].a = RegionId(77);
        let v = verify_pair_certificate(&c, &x, &y);
        assert!(v.problems.len() >= 2);

        let mut c = good;
        c.circles.pop();
        assert!(!verify_pair_certificate(&c, &x, &y).is_valid());
    }

    #[test]
    fn certificate_json_shape() {
        let c = realize_pair(&seq(&[3, 1, 1, 1]), &seq(&[2, 2, 1, 1])).unwrap();
        let j: serde_json::Value = serde_json::to_value(&c).unwrap();
        assert_eq!(j["n"], 4);
        assert_eq!(j["circles"], serde_json::json!([1, 2, 3]));
        assert_eq!(j["marked"], 3);
        assert_eq!(j["x"], serde_json::json!([3, 1, 1, 1]));
        let back: PairCertificate = serde_json::from_value(j).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn dot_highlights_marked() {
        let c = realize_pair(&seq(&[2, 1, 1]), &seq(&[2, 1, 1])).unwrap();
        let (f, g) = c.to_dot().unwrap();
        assert!(f.starts_with("graph F") && g.starts_with("graph G"));
        assert_eq!(f.matches("color=red").count(), 1);
    }
}
