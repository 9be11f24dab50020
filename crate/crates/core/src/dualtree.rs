//! Region trees: the graph dual to a family of disjoint circles on a sphere.
//!
//! Every complementary region is a vertex and every circle is an edge joining
//! the two regions it separates. By the Jordan curve theorem each circle
//! disconnects the sphere, so the dual graph is always a tree and a region's
//! degree is its number of boundary circles.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seqcore::DegreeSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RegionId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CircleId(pub u32);

/// One circle, seen from the two regions it bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeEdge {
    pub circle: CircleId,
    pub a: RegionId,
    pub b: RegionId,
}

impl TreeEdge {
    pub fn touches(&self, r: RegionId) -> bool {
        self.a == r || self.b == r
    }

    pub fn other(&self, r: RegionId) -> RegionId {
        if self.a == r {
            self.b
        } else {
            self.a
        }
    }
}

/// Region `numbering[i]` carries index `i + 1`.
pub type Numbering = Vec<RegionId>;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionTree {
    pub regions: Vec<RegionId>,
    pub edges: Vec<TreeEdge>,
}

impl RegionTree {
    /// Two regions joined by a single circle.
    pub fn single_edge(a: RegionId, b: RegionId, circle: CircleId) -> Self {
        Self {
            regions: vec![a, b],
            edges: vec![TreeEdge { circle, a, b }],
        }
    }

    pub fn fresh_region(&mut self) -> RegionId {
        let id = self.regions.iter().map(|r| r.0 + 1).max().unwrap_or(0);
        let r = RegionId(id);
        self.regions.push(r);
        r
    }

    pub fn add_edge(&mut self, circle: CircleId, a: RegionId, b: RegionId) {
        self.edges.push(TreeEdge { circle, a, b });
    }

    pub fn edge(&self, circle: CircleId) -> Option<&TreeEdge> {
        self.edges.iter().find(|e| e.circle == circle)
    }

    pub fn circles(&self) -> BTreeSet<CircleId> {
        self.edges.iter().map(|e| e.circle).collect()
    }

    /// Degrees of all regions; only meaningful for structurally valid trees.
    pub fn degrees(&self) -> BTreeMap<RegionId, usize> {
        let mut deg: BTreeMap<RegionId, usize> = self.regions.iter().map(|&r| (r, 0)).collect();
        for e in &self.edges {
            *deg.entry(e.a).or_default() += 1;
            *deg.entry(e.b).or_default() += 1;
        }
        deg
    }

    pub fn degree(&self, r: RegionId) -> usize {
        self.edges.iter().filter(|e| e.touches(r)).count()
    }

    /// Checks that the structure is a tree with distinct region and circle ids.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidStructure(m));
        if self.regions.is_empty() {
            return bad("no regions".into());
        }
        let index: BTreeMap<RegionId, usize> =
            self.regions.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        if index.len() != self.regions.len() {
            return bad("duplicate region id".into());
        }
        if self.edges.len() + 1 != self.regions.len() {
            return bad(format!(
                "{} edges on {} regions; a tree needs exactly one fewer",
                self.edges.len(),
                self.regions.len()
            ));
        }
        if self.circles().len() != self.edges.len() {
            return bad("duplicate circle id".into());
        }
        let mut parent: Vec<usize> = (0..self.regions.len()).collect();
        fn find(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        for e in &self.edges {
            let (Some(&a), Some(&b)) = (index.get(&e.a), index.get(&e.b)) else {
                return bad(format!("circle {} touches an unknown region", e.circle.0));
            };
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return bad(format!("circle {} closes a cycle", e.circle.0));
            }
            parent[ra] = rb;
        }
        // n - 1 edges and no cycle imply connectivity.
        Ok(())
    }
}

/// Checks that `numbering` lists every region of `tree` exactly once.
pub fn check_numbering(tree: &RegionTree, numbering: &[RegionId]) -> Result<()> {
    let regions: BTreeSet<RegionId> = tree.regions.iter().copied().collect();
    let numbered: BTreeSet<RegionId> = numbering.iter().copied().collect();
    if numbering.len() != tree.regions.len() || numbered != regions {
        return Err(Error::InvalidStructure(
            "numbering is not a bijection onto the regions".into(),
        ));
    }
    Ok(())
}

/// Entry `i` is the degree of the region carrying index `i + 1`.
pub fn degree_sequence_of_tree(tree: &RegionTree, numbering: &[RegionId]) -> Result<DegreeSequence> {
    tree.validate()?;
    check_numbering(tree, numbering)?;
    if tree.regions.len() < 2 {
        return Err(Error::InvalidStructure("a single region has no circles".into()));
    }
    let deg = tree.degrees();
    DegreeSequence::new(numbering.iter().map(|r| deg[r] as i64).collect())
}

/// A caterpillar whose region numbered `i` has degree `seq[i]`.
///
/// Spine: the entries greater than 1, in sequence order. Leaves are handed
/// out left to right along the spine. Region ids equal positions, so the
/// returned numbering is the identity.
pub fn tree_from_treelike(seq: &DegreeSequence) -> Result<(RegionTree, Numbering)> {
    if !seq.is_tree_like() {
        return Err(Error::Unrealizable(format!("{seq} is not tree-like")));
    }
    let x = seq.entries();
    let n = x.len();
    let mut tree = RegionTree {
        regions: (0..n as u32).map(RegionId).collect(),
        edges: Vec::with_capacity(n - 1),
    };
    let mut next_circle = 1u32;
    let mut connect = |tree: &mut RegionTree, a: usize, b: usize| {
        tree.add_edge(CircleId(next_circle), RegionId(a as u32), RegionId(b as u32));
        next_circle += 1;
    };

    let spine: Vec<usize> = (0..n).filter(|&i| x[i] > 1).collect();
    let mut leaves = (0..n).filter(|&i| x[i] == 1);
    if spine.is_empty() {
        // (1, 1)
        connect(&mut tree, 0, 1);
    } else {
        for w in spine.windows(2) {
            connect(&mut tree, w[0], w[1]);
        }
        for (k, &v) in spine.iter().enumerate() {
            let spine_deg = (k > 0) as i64 + (k + 1 < spine.len()) as i64;
            for _ in 0..x[v] - spine_deg {
                let leaf = leaves
                    .next()
                    .ok_or_else(|| Error::Internal("caterpillar ran out of leaves".into()))?;
                connect(&mut tree, v, leaf);
            }
        }
    }
    let numbering = tree.regions.clone();
    Ok((tree, numbering))
}

/// All labeled trees on vertices `0..n` in which vertex `i` has degree `seq[i]`.
///
/// Trees are produced from Prüfer words: vertex `v` has degree equal to its
/// number of occurrences in the word plus one, so the words for a degree
/// sequence are exactly the distinct arrangements of the multiset holding
/// `seq[v] - 1` copies of `v`. Words are generated lazily in lexicographic
/// order.
pub fn enumerate_labeled_trees(seq: &DegreeSequence) -> LabeledTrees {
    let n = seq.len();
    let word = if n >= 2 && seq.is_tree_like() {
        let w: Vec<usize> = (0..n)
            .flat_map(|v| std::iter::repeat_n(v, (seq.entries()[v] - 1) as usize))
            .collect();
        Some(w)
    } else {
        None
    };
    LabeledTrees {
        n,
        degrees: seq.entries().to_vec(),
        word,
    }
}

pub struct LabeledTrees {
    n: usize,
    degrees: Vec<i64>,
    /// Next word to decode; `None` once exhausted.
    word: Option<Vec<usize>>,
}

impl LabeledTrees {
    /// `(n-2)! / prod (d_i - 1)!`, or 0 when the sequence is not tree-like.
    /// `None` on u128 overflow.
    pub fn total(&self) -> Option<u128> {
        let n = self.n;
        if n < 2 || self.degrees.iter().sum::<i64>() != 2 * n as i64 - 2 {
            return Some(0);
        }
        // Product of binomials: choose positions for each vertex in turn.
        let mut remaining = (n - 2) as u128;
        let mut total: u128 = 1;
        for &d in &self.degrees {
            let k = (d - 1) as u128;
            total = total.checked_mul(binomial(remaining, k)?)?;
            remaining -= k;
        }
        Some(total)
    }
}

fn binomial(n: u128, k: u128) -> Option<u128> {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

impl Iterator for LabeledTrees {
    type Item = RegionTree;

    fn next(&mut self) -> Option<RegionTree> {
        let word = self.word.as_mut()?;
        let tree = decode_prufer(self.n, word);
        if !next_permutation(word) {
            self.word = None;
        }
        Some(tree)
    }
}

/// Lexicographic successor; false when `v` was the last arrangement.
fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

fn decode_prufer(n: usize, word: &[usize]) -> RegionTree {
    let mut remaining = vec![1usize; n];
    for &v in word {
        remaining[v] += 1;
    }
    let mut tree = RegionTree {
        regions: (0..n as u32).map(RegionId).collect(),
        edges: Vec::with_capacity(n - 1),
    };
    let mut circle = 1u32;
    for &v in word {
        let leaf = (0..n).find(|&u| remaining[u] == 1).unwrap();
        tree.add_edge(CircleId(circle), RegionId(leaf as u32), RegionId(v as u32));
        circle += 1;
        remaining[leaf] -= 1;
        remaining[v] -= 1;
    }
    let last: Vec<usize> = (0..n).filter(|&u| remaining[u] == 1).collect();
    tree.add_edge(CircleId(circle), RegionId(last[0] as u32), RegionId(last[1] as u32));
    tree
}

/// JSON form of a tree together with its numbering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumberedTree {
    pub regions: Vec<RegionId>,
    pub edges: Vec<TreeEdge>,
    pub numbering: Numbering,
}

impl NumberedTree {
    pub fn new(tree: &RegionTree, numbering: &[RegionId]) -> Self {
        Self {
            regions: tree.regions.clone(),
            edges: tree.edges.clone(),
            numbering: numbering.to_vec(),
        }
    }
}

/// Graphviz rendering. The region numbered `i` is drawn as `{prefix}_{i}`;
/// edges are labeled with their circle id and `highlight` is drawn bold red.
pub fn to_dot(
    tree: &RegionTree,
    numbering: &[RegionId],
    graph_name: &str,
    prefix: &str,
    highlight: Option<CircleId>,
) -> Result<String> {
    check_numbering(tree, numbering)?;
    let index: BTreeMap<RegionId, usize> =
        numbering.iter().enumerate().map(|(i, &r)| (r, i + 1)).collect();
    let deg = tree.degrees();
    let mut out = String::new();
    writeln!(out, "graph {graph_name} {{").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for (i, r) in numbering.iter().enumerate() {
        writeln!(
            out,
            "  {prefix}{} [label=\"{prefix}_{}\\n{}\"];",
            i + 1,
            i + 1,
            deg[r]
        )
        .unwrap();
    }
    let mut edges = tree.edges.clone();
    edges.sort_by_key(|e| e.circle);
    for e in &edges {
        let style = if Some(e.circle) == highlight {
            ", color=red, penwidth=2.5"
        } else {
            ""
        };
        writeln!(
            out,
            "  {prefix}{} -- {prefix}{} [label=\"{}\"{style}];",
            index[&e.a], index[&e.b], e.circle.0
        )
        .unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqcore::seq;

    fn star(center_first: bool) -> (RegionTree, Numbering) {
        let mut t = RegionTree::default();
        let c = t.fresh_region();
        for i in 0..3 {
            let leaf = t.fresh_region();
            t.add_edge(CircleId(i + 1), c, leaf);
        }
        let mut num = t.regions.clone();
        if !center_first {
            num.rotate_left(1);
        }
        (t, num)
    }

    fn path(n: u32) -> RegionTree {
        let mut t = RegionTree {
            regions: (0..n).map(RegionId).collect(),
            edges: vec![],
        };
        for i in 0..n - 1 {
            t.add_edge(CircleId(i + 1), RegionId(i), RegionId(i + 1));
        }
        t
    }

    #[test]
    fn degree_sequences_of_small_trees() {
        let t = RegionTree::single_edge(RegionId(0), RegionId(1), CircleId(1));
        assert_eq!(degree_sequence_of_tree(&t, &t.regions).unwrap(), seq(&[1, 1]));

        let (t, num) = star(true);
        assert_eq!(degree_sequence_of_tree(&t, &num).unwrap(), seq(&[3, 1, 1, 1]));

        // Path 0-1-2-3 numbered center-out.
        let t = path(4);
        let num = vec![RegionId(1), RegionId(2), RegionId(0), RegionId(3)];
        assert_eq!(degree_sequence_of_tree(&t, &num).unwrap(), seq(&[2, 2, 1, 1]));
    }

    #[test]
    fn structural_errors() {
        let mut t = path(3);
        t.add_edge(CircleId(9), RegionId(0), RegionId(2));
        assert!(matches!(t.validate(), Err(Error::InvalidStructure(_))));

        let mut t = path(3);
        t.edges[1].circle = CircleId(1);
        assert!(t.validate().is_err());

        // Right edge count but a cycle plus an isolated region.
        let t = RegionTree {
            regions: (0..4).map(RegionId).collect(),
            edges: vec![
                TreeEdge { circle: CircleId(1), a: RegionId(0), b: RegionId(1) },
                TreeEdge { circle: CircleId(2), a: RegionId(1), b: RegionId(2) },
                TreeEdge { circle: CircleId(3), a: RegionId(2), b: RegionId(0) },
            ],
        };
        assert!(t.validate().is_err());

        let t = path(3);
        assert!(degree_sequence_of_tree(&t, &[RegionId(0), RegionId(0), RegionId(1)]).is_err());
        assert!(degree_sequence_of_tree(&t, &[RegionId(0), RegionId(7), RegionId(1)]).is_err());
    }

    #[test]
    fn caterpillar_examples() {
        let (t, num) = tree_from_treelike(&seq(&[2, 1, 1])).unwrap();
        t.validate().unwrap();
        assert_eq!(t.degree(num[0]), 2);
        assert_eq!(degree_sequence_of_tree(&t, &num).unwrap(), seq(&[2, 1, 1]));

        let (t, num) = tree_from_treelike(&seq(&[3, 1, 1, 1])).unwrap();
        assert!(t.edges.iter().all(|e| e.touches(num[0])));

        let (t, _) = tree_from_treelike(&seq(&[2, 2, 1, 1])).unwrap();
        let mut degs: Vec<usize> = t.degrees().into_values().collect();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 2, 2]);

        assert!(matches!(
            tree_from_treelike(&seq(&[2, 2])),
            Err(Error::Unrealizable(_))
        ));
    }

    #[test]
    fn prufer_counts() {
        let trees = enumerate_labeled_trees(&seq(&[3, 1, 1, 1]));
        assert_eq!(trees.total(), Some(1));
        assert_eq!(trees.collect::<Vec<_>>().len(), 1);

        let trees = enumerate_labeled_trees(&seq(&[2, 2, 1, 1]));
        assert_eq!(trees.total(), Some(2));
        let all: Vec<_> = trees.collect();
        assert_eq!(all.len(), 2);
        for t in &all {
            t.validate().unwrap();
            assert_eq!(degree_sequence_of_tree(t, &t.regions).unwrap(), seq(&[2, 2, 1, 1]));
        }

        let trees = enumerate_labeled_trees(&seq(&[2, 2]));
        assert_eq!(trees.total(), Some(0));
        assert_eq!(trees.collect::<Vec<_>>().len(), 0);

        assert_eq!(enumerate_labeled_trees(&seq(&[1, 1])).collect::<Vec<_>>().len(), 1);
        assert_eq!(enumerate_labeled_trees(&seq(&[1])).total(), Some(0));
    }

    #[test]
    fn caterpillar_roundtrip_exhaustive() {
        for n in 2..=8usize {
            let total = 2 * n as i64 - 2;
            // compositions via stars and bars over cut positions
            for mask in 0u32..(1 << (total - 1)) {
                if mask.count_ones() as usize != n - 1 {
                    continue;
                }
                let mut parts = vec![];
                let mut run = 1;
                for bit in 0..total - 1 {
                    if mask & (1 << bit) != 0 {
                        parts.push(run);
                        run = 1;
                    } else {
                        run += 1;
                    }
                }
                parts.push(run);
                let s = seq(&parts);
                let (t, num) = tree_from_treelike(&s).unwrap();
                t.validate().unwrap();
                assert_eq!(degree_sequence_of_tree(&t, &num).unwrap(), s);
            }
        }
    }

    #[test]
    fn prufer_iteration_matches_formula() {
        for v in [vec![4, 1, 1, 1, 1], vec![2, 3, 1, 2, 1, 1], vec![3, 3, 1, 1, 1, 1, 2]] {
            let s = seq(&v);
            let trees = enumerate_labeled_trees(&s);
            let expected = trees.total().unwrap();
            let mut seen = BTreeSet::new();
            for t in trees {
                t.validate().unwrap();
                assert_eq!(degree_sequence_of_tree(&t, &t.regions).unwrap(), s);
                let mut key: Vec<(u32, u32)> =
                    t.edges.iter().map(|e| (e.a.0.min(e.b.0), e.a.0.max(e.b.0))).collect();
                key.sort();
                seen.insert(key);
            }
            assert_eq!(seen.len() as u128, expected);
        }
    }

    #[test]
    fn dot_is_deterministic_and_highlights() {
        let (t, num) = star(true);
        let dot = to_dot(&t, &num, "F", "f", Some(CircleId(2))).unwrap();
        assert!(dot.starts_with("graph F {"));
        assert!(dot.contains("f1 [label=\"f_1\\n3\"]"));
        assert!(dot.contains("f1 -- f3 [label=\"2\", color=red, penwidth=2.5]"));
        assert_eq!(dot, to_dot(&t, &num, "F", "f", Some(CircleId(2))).unwrap());
    }

    #[test]
    fn numbered_tree_json_shape() {
        let t = RegionTree::single_edge(RegionId(0), RegionId(1), CircleId(1));
        let j = serde_json::to_string(&NumberedTree::new(&t, &t.regions)).unwrap();
        assert_eq!(
            j,
            r#"{"regions":[0,1],"edges":[{"circle":1,"a":0,"b":1}],"numbering":[0,1]}"#
        );
    }
}
