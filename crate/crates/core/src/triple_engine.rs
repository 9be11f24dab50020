//! Three spheres with empty triple intersection.
//!
//! Sphere `k` is assembled as the connected sum of two spheres `Q_{k+1}`
//! and `P_{k-1}` taken from two different pair realizations. The pair
//! `(Q_j, P_{j-1})` realizes half-sequences `(q_j, p_{j-1})` of common
//! length `m_{j+1}`, so the circles of that pair are exactly
//! `f_{j-1} ∩ f_j`. The tube joins the two components numbered 1, which is
//! why each sequence `x_k` is split so that the two heads add up to `x_{k,1}`.
//!
//! Indices are 0-based in code: sphere `k` in `0..3`, neighbors mod 3.

use serde::{Deserialize, Serialize};

use crate::dualtree::RegionId;
use crate::error::{Error, Result, Verdict};
use crate::pair_engine::{realize_pair, verify_pair_certificate, PairCertificate};
use crate::seqcore::DegreeSequence;

const fn next(k: usize) -> usize {
    (k + 1) % 3
}

const fn prev(k: usize) -> usize {
    (k + 2) % 3
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripleFailure {
    Parity,
    /// `n_k >= n_{k+1} + n_{k+2}` for this (0-based) `k`.
    Triangle(usize),
    /// Sequence `k` (0-based) is not tree-like.
    NotTreeLike(usize),
}

impl TripleFailure {
    pub fn as_str(&self) -> &'static str {
        match self {
            TripleFailure::Parity => "parity",
            TripleFailure::Triangle(_) => "triangle",
            TripleFailure::NotTreeLike(_) => "tree_like",
        }
    }
}

/// The first violated condition. Length conditions are checked before
/// tree-likeness.
pub fn triple_failure(xs: [&DegreeSequence; 3]) -> Option<TripleFailure> {
    let n = xs.map(|x| x.len());
    if (n[0] + n[1] + n[2]) % 2 == 0 {
        return Some(TripleFailure::Parity);
    }
    if let Some(k) = (0..3).find(|&k| n[k] >= n[next(k)] + n[prev(k)]) {
        return Some(TripleFailure::Triangle(k));
    }
    if let Some(k) = (0..3).find(|&k| !xs[k].is_tree_like()) {
        return Some(TripleFailure::NotTreeLike(k));
    }
    None
}

pub fn decide_triple(x1: &DegreeSequence, x2: &DegreeSequence, x3: &DegreeSequence) -> bool {
    triple_failure([x1, x2, x3]).is_none()
}

/// `m_k = (n_{k+1} + n_{k+2} - n_k + 1) / 2`.
pub fn compute_m(n: [i64; 3]) -> Result<[i64; 3]> {
    if (n[0] + n[1] + n[2]) % 2 == 0 {
        return Err(Error::Precondition(format!(
            "n_1 + n_2 + n_3 = {} is even; m would not be an integer",
            n[0] + n[1] + n[2]
        )));
    }
    let m = [0, 1, 2].map(|k| (n[next(k)] + n[prev(k)] - n[k] + 1) / 2);
    if let Some(k) = (0..3).find(|&k| m[k] < 1) {
        return Err(Error::Precondition(format!(
            "m_{} = {} is not positive (triangle condition fails)",
            k + 1,
            m[k]
        )));
    }
    Ok(m)
}

/// One half of a split sequence. A degenerate half is a single region with
/// no boundary circles; it stands for a sphere disjoint from its partner.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub enum Half {
    Degenerate,
    Seq(DegreeSequence),
}

impl Half {
    pub fn head(&self) -> i64 {
        match self {
            Half::Degenerate => 0,
            Half::Seq(s) => s.head(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Half::Degenerate => 1,
            Half::Seq(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn tail(&self) -> &[i64] {
        match self {
            Half::Degenerate => &[],
            Half::Seq(s) => &s.entries()[1..],
        }
    }
}

impl TryFrom<Vec<i64>> for Half {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        if v == [0] {
            Ok(Half::Degenerate)
        } else {
            DegreeSequence::new(v).map(Half::Seq)
        }
    }
}

impl From<Half> for Vec<i64> {
    fn from(h: Half) -> Self {
        match h {
            Half::Degenerate => vec![0],
            Half::Seq(s) => s.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Split {
    pub a: DegreeSequence,
    pub b: DegreeSequence,
    /// The selected split point, `1..=r`.
    pub s: usize,
}

/// Splits a descending tree-like `x` into tree-like `a` (length `p`) and `b`
/// (length `q`) with `a_1 + b_1 = x_1` and the remaining entries of `x`
/// shared out between the tails.
///
/// With `z_s = x_2 + ... + x_s`, the smallest `s <= r` satisfying
/// `z_s - s + 3 <= p <= z_s - s + x_1 + 1` is used; then
/// `a = (p - (z_s - s + 3) + 1, x_2, ..., x_s, 1, ...)` and
/// `b = (x_1 - a_1, x_{s+1}, ..., x_r, 1, ...)`.
pub fn lemma2_split(x: &DegreeSequence, p: usize, q: usize) -> Result<Split> {
    if !x.is_tree_like() {
        return Err(Error::Precondition(format!("{x} is not tree-like")));
    }
    if !x.is_sorted_desc() {
        return Err(Error::Precondition(format!("{x} is not sorted in descending order")));
    }
    let n = x.len();
    if q <= 1 || p < q || p + q != n + 1 {
        return Err(Error::Precondition(format!(
            "need p >= q > 1 and p + q = n + 1 = {}, got p = {p}, q = {q}",
            n + 1
        )));
    }
    let v = x.entries();
    let x1 = v[0];
    let r = x.r_count();
    let pi = p as i64;

    let mut z = 0i64;
    for s in 1..=r {
        if s >= 2 {
            z += v[s - 1];
        }
        let si = s as i64;
        let lo = z - si + 3;
        let hi = z - si + x1 + 1;
        if !(lo <= pi && pi <= hi) {
            continue;
        }
        let a1 = pi - lo + 1;
        let b_big = r - s; // x_{s+1} .. x_r
        if p < s || q < b_big + 1 {
            return Err(Error::Internal(format!("split s = {s} does not fit p = {p}, q = {q}")));
        }
        let a: Vec<i64> = std::iter::once(a1)
            .chain(v[1..s].iter().copied())
            .chain(std::iter::repeat_n(1, p - s))
            .collect();
        let b: Vec<i64> = std::iter::once(x1 - a1)
            .chain(v[s..r].iter().copied())
            .chain(std::iter::repeat_n(1, q - 1 - b_big))
            .collect();
        return Ok(Split {
            a: DegreeSequence::new(a)?,
            b: DegreeSequence::new(b)?,
            s,
        });
    }
    Err(Error::Internal(format!("no admissible split point for {x}, p = {p}")))
}

/// The tube inside sphere `sphere` (1-based) joining the component numbered
/// 1 of `Q` (tree S of pair `q_pair`) with the component numbered 1 of `P`
/// (tree T of pair `p_pair`). A `None` region is a degenerate half.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tube {
    pub sphere: usize,
    pub q_pair: usize,
    pub q_region: Option<RegionId>,
    pub p_pair: usize,
    pub p_region: Option<RegionId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Halves {
    /// `q[j]` has length `m_{j+1}`.
    pub q: [Half; 3],
    /// `p[j]` has length `m_{j+2}`.
    pub p: [Half; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleCertificate {
    pub x: [DegreeSequence; 3],
    pub n: [usize; 3],
    pub m: [i64; 3],
    pub halves: Halves,
    /// Pair `j` realizes `(q_j, p_{j-1})`; its circles form `f_{j-1} ∩ f_j`.
    /// `None` when both halves are degenerate.
    pub pairs: [Option<PairCertificate>; 3],
    pub tubes: [Tube; 3],
    /// Degree multiset of each sphere, descending.
    pub spheres: [Vec<i64>; 3],
    /// Sphere pairs (1-based) whose intersection is empty.
    #[serde(default)]
    pub empty_intersections: Vec<[usize; 2]>,
}

impl TripleCertificate {
    /// Circle counts of `f_1 ∩ f_2`, `f_1 ∩ f_3` and `f_2 ∩ f_3`.
    pub fn pairwise_circle_counts(&self) -> [usize; 3] {
        let c = self.pair_circle_counts();
        // pair 1 = f_1 ∩ f_2, pair 0 = f_3 ∩ f_1, pair 2 = f_2 ∩ f_3
        [c[1], c[0], c[2]]
    }

    fn pair_circle_counts(&self) -> [usize; 3] {
        [0, 1, 2].map(|j| self.pairs[j].as_ref().map_or(0, |c| c.circles.len()))
    }
}

fn split_sphere(x: &DegreeSequence, q_len: usize, p_len: usize) -> Result<(Half, Half)> {
    let sorted = x.sorted_desc();
    if q_len == 1 {
        return Ok((Half::Degenerate, Half::Seq(sorted)));
    }
    if p_len == 1 {
        return Ok((Half::Seq(sorted), Half::Degenerate));
    }
    let split = lemma2_split(&sorted, q_len.max(p_len), q_len.min(p_len))?;
    let (a, b) = (Half::Seq(split.a), Half::Seq(split.b));
    Ok(if q_len >= p_len { (a, b) } else { (b, a) })
}

/// Degree multiset of sphere `k` after the connected sum, read off the
/// pair trees. `None` if the certificate does not reference real regions.
fn sphere_multiset(cert: &TripleCertificate, k: usize) -> Option<Vec<i64>> {
    let tube = &cert.tubes[k];
    let mut out = Vec::new();
    let mut merged = 0i64;
    let q_tree = cert.pairs.get(tube.q_pair)?.as_ref().map(|c| &c.tree_s);
    let p_tree = cert.pairs.get(tube.p_pair)?.as_ref().map(|c| &c.tree_t);
    for (tree, site) in [(q_tree, tube.q_region), (p_tree, tube.p_region)] {
        match (tree, site) {
            (Some(t), Some(r)) => {
                let deg = t.degrees();
                merged += *deg.get(&r)? as i64;
                out.extend(deg.iter().filter(|(&id, _)| id != r).map(|(_, &d)| d as i64));
            }
            (None, None) => {}
            _ => return None,
        }
    }
    out.push(merged);
    out.sort_unstable_by(|a, b| b.cmp(a));
    Some(out)
}

pub fn realize_triple(
    x1: &DegreeSequence,
    x2: &DegreeSequence,
    x3: &DegreeSequence,
) -> Result<TripleCertificate> {
    let xs = [x1, x2, x3];
    if let Some(f) = triple_failure(xs) {
        let detail = match f {
            TripleFailure::Parity => "n_1 + n_2 + n_3 is even".to_string(),
            TripleFailure::Triangle(k) => format!("n_{} is not less than the other two combined", k + 1),
            TripleFailure::NotTreeLike(k) => format!("x_{} is not tree-like", k + 1),
        };
        return Err(Error::Unrealizable(format!("{}: {detail}", f.as_str())));
    }
    let n = xs.map(|x| x.len());
    let m = compute_m(n.map(|v| v as i64))?;

    let mut q: [Half; 3] = [Half::Degenerate, Half::Degenerate, Half::Degenerate];
    let mut p = q.clone();
    for k in 0..3 {
        // Sphere k carries q_{k+1} (length m_{k+2}) and p_{k-1} (length m_{k+1}).
        let (qh, ph) = split_sphere(xs[k], m[prev(k)] as usize, m[next(k)] as usize)?;
        q[next(k)] = qh;
        p[prev(k)] = ph;
    }

    let mut pairs: [Option<PairCertificate>; 3] = [None, None, None];
    let mut empty_intersections = Vec::new();
    for j in 0..3 {
        pairs[j] = match (&q[j], &p[prev(j)]) {
            (Half::Seq(a), Half::Seq(b)) => Some(realize_pair(a, b)?),
            (Half::Degenerate, Half::Degenerate) => {
                let mut spheres = [prev(j) + 1, j + 1];
                spheres.sort();
                empty_intersections.push(spheres);
                None
            }
            _ => return Err(Error::Internal(format!("pair {} mixes a degenerate half", j + 1))),
        };
    }

    let tubes = [0, 1, 2].map(|k| Tube {
        sphere: k + 1,
        q_pair: next(k),
        q_region: pairs[next(k)].as_ref().map(|c| c.numbering_s[0]),
        p_pair: k,
        p_region: pairs[k].as_ref().map(|c| c.numbering_t[0]),
    });

    let mut cert = TripleCertificate {
        x: xs.map(|x| x.clone()),
        n,
        m,
        halves: Halves { q, p },
        pairs,
        tubes,
        spheres: [vec![], vec![], vec![]],
        empty_intersections,
    };
    for k in 0..3 {
        cert.spheres[k] = sphere_multiset(&cert, k)
            .ok_or_else(|| Error::Internal("tube points at a missing region".into()))?;
    }

    let verdict = verify_triple_certificate(&cert, x1, x2, x3);
    if !verdict.is_valid() {
        return Err(Error::Internal(format!(
            "engine produced an invalid triple certificate: {}",
            verdict.problems.join("; ")
        )));
    }
    Ok(cert)
}

#[allow(clippy::needless_range_loop)]
pub fn verify_triple_certificate(
    cert: &TripleCertificate,
    x1: &DegreeSequence,
    x2: &DegreeSequence,
    x3: &DegreeSequence,
) -> Verdict {
    let xs = [x1, x2, x3];
    let mut v = Verdict::default();
    let n = xs.map(|x| x.len());
    v.check(cert.n == n, || format!("n = {:?}, sequences have lengths {n:?}", cert.n));
    v.check(cert.x.iter().zip(xs).all(|(a, b)| a == b), || {
        "certificate claims different sequences".into()
    });
    match compute_m(n.map(|v| v as i64)) {
        Ok(m) => v.check(cert.m == m, || format!("m = {:?}, expected {m:?}", cert.m)),
        Err(e) => v.fail(e.to_string()),
    }
    for k in 0..3 {
        v.check(cert.m[next(k)] + cert.m[prev(k)] == n[k] as i64 + 1, || {
            format!("m_{} + m_{} != n_{} + 1", next(k) + 1, prev(k) + 1, k + 1)
        });
    }
    v.check(cert.m.iter().filter(|&&m| m == 1).count() <= 1, || {
        "more than one m equals 1".into()
    });
    if !v.is_valid() {
        return v;
    }

    let Halves { q, p } = &cert.halves;
    for j in 0..3 {
        v.check(q[j].len() as i64 == cert.m[next(j)], || {
            format!("q_{} has length {}, expected m_{}", j + 1, q[j].len(), next(j) + 1)
        });
        v.check(p[j].len() as i64 == cert.m[prev(j)], || {
            format!("p_{} has length {}, expected m_{}", j + 1, p[j].len(), prev(j) + 1)
        });
    }

    for j in 0..3 {
        match (&q[j], &p[prev(j)], &cert.pairs[j]) {
            (Half::Seq(a), Half::Seq(b), Some(pc)) => {
                let pv = verify_pair_certificate(pc, a, b);
                for prob in pv.problems {
                    v.fail(format!("pair {}: {prob}", j + 1));
                }
                v.check(pc.marked_touches_heads(), || {
                    format!("pair {}: marked circle misses a component numbered 1", j + 1)
                });
            }
            (Half::Degenerate, Half::Degenerate, None) => {}
            _ => v.fail(format!("pair {} does not match its halves", j + 1)),
        }
    }
    if !v.is_valid() {
        return v;
    }

    for k in 0..3 {
        let qh = &q[next(k)];
        let ph = &p[prev(k)];
        let mut expected = xs[k].multiset();
        let head = *expected.last().unwrap();
        v.check(qh.head() + ph.head() == head, || {
            format!("sphere {}: heads {} + {} != {head}", k + 1, qh.head(), ph.head())
        });
        let mut parts: Vec<i64> = qh.tail().iter().chain(ph.tail()).copied().collect();
        parts.push(qh.head() + ph.head());
        parts.sort_unstable();
        v.check(parts == expected, || {
            format!("sphere {}: halves give {parts:?}, expected {expected:?}", k + 1)
        });

        let t = &cert.tubes[k];
        let q_site = cert.pairs[next(k)].as_ref().map(|c| c.numbering_s[0]);
        let p_site = cert.pairs[k].as_ref().map(|c| c.numbering_t[0]);
        v.check(
            t.sphere == k + 1
                && t.q_pair == next(k)
                && t.p_pair == k
                && t.q_region == q_site
                && t.p_region == p_site,
            || format!("tube {} is not attached at the components numbered 1", k + 1),
        );

        expected.reverse();
        match sphere_multiset(cert, k) {
            Some(got) => {
                v.check(got == expected, || {
                    format!("sphere {}: trees give {got:?}, expected {expected:?}", k + 1)
                });
                v.check(cert.spheres[k] == expected, || {
                    format!("sphere {}: recorded multiset {:?} is wrong", k + 1, cert.spheres[k])
                });
            }
            None => v.fail(format!("sphere {}: tube references a missing region", k + 1)),
        }
    }

    let c = cert.pair_circle_counts();
    for j in 0..3 {
        v.check(c[j] as i64 == cert.m[next(j)] - 1, || {
            format!("pair {} has {} circles, expected m_{} - 1", j + 1, c[j], next(j) + 1)
        });
    }
    for k in 0..3 {
        // pair k is f_{k-1} ∩ f_k, pair k+1 is f_k ∩ f_{k+1}
        v.check(n[k] == c[k] + c[next(k)] + 1, || {
            format!("n_{} != |f ∩ f'| + |f ∩ f''| + 1", k + 1)
        });
    }
    v
}
