//! Brute-force oracles and exhaustive sweeps.
//!
//! The oracles here re-derive expected answers directly from the defining
//! statements (sums, Prüfer word counts, head/tail bipartitions, sequential
//! labeling) and share no construction code with the engines they check.
//! Each sweep enumerates its whole input space, runs the engine on every
//! item through [`crate::exec`], and reports the failures.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use serde::Serialize;

use crate::dualtree::{degree_sequence_of_tree, enumerate_labeled_trees};
use crate::exec::{self, Exec};
use crate::meshlab::{build_diagonal_scene, validate_scene};
use crate::pair_engine::{lemma1_reduce, realize_pair, verify_pair_certificate};
use crate::seqcore::DegreeSequence;
use crate::sketch::{build_sketch, sketch_dual_tree, CircleKind};
use crate::triple_engine::{lemma2_split, realize_triple, verify_triple_certificate};

/// Failures kept verbatim in a report; the count is always exact.
const MAX_LISTED_FAILURES: usize = 20;

/// Lexicographic iterator over compositions of `total` into `parts` positive parts.
#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<i64>>,
}

impl Compositions {
    pub fn new(parts: usize, total: i64) -> Self {
        let current = (parts >= 1 && total >= parts as i64).then(|| {
            let mut v = vec![1; parts];
            v[parts - 1] = total - (parts as i64 - 1);
            v
        });
        Self { current }
    }
}

impl Iterator for Compositions {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        let out = self.current.take()?;
        let n = out.len();
        // Rightmost position that can grow while every later part stays >= 1.
        let mut suffix = 0i64;
        let mut succ = None;
        for i in (0..n.saturating_sub(1)).rev() {
            suffix += out[i + 1];
            if suffix > (n - 1 - i) as i64 {
                let mut v = out.clone();
                v[i] += 1;
                for e in v.iter_mut().take(n - 1).skip(i + 1) {
                    *e = 1;
                }
                v[n - 1] = suffix - 1 - (n - 2 - i) as i64;
                succ = Some(v);
                break;
            }
        }
        self.current = succ;
        Some(out)
    }
}

/// All tree-like sequences of length `n` (compositions of `2n - 2` into `n`
/// parts) in lexicographic order. Empty for `n < 2`.
pub fn enumerate_tree_like(n: usize) -> impl Iterator<Item = DegreeSequence> {
    let it = if n >= 2 {
        Compositions::new(n, 2 * n as i64 - 2)
    } else {
        Compositions { current: None }
    };
    it.map(|v| DegreeSequence::new(v).expect("compositions are positive"))
}

/// Every positive sequence with length `1..=max_len` and sum at most `max_sum`.
pub fn all_positive_sequences(max_len: usize, max_sum: i64) -> Vec<DegreeSequence> {
    let mut out = Vec::new();
    for len in 1..=max_len {
        for total in len as i64..=max_sum {
            out.extend(Compositions::new(len, total).map(|v| DegreeSequence::new(v).unwrap()));
        }
    }
    out
}

fn oracle_tree_like(v: &[i64]) -> bool {
    v.iter().sum::<i64>() == 2 * v.len() as i64 - 2
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}

/// Head first, tail sorted descending: splits are compared up to the
/// order of their non-head entries.
pub fn canonical_split(a: &[i64], b: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let canon = |v: &[i64]| {
        let mut t = v[1..].to_vec();
        t.sort_unstable_by(|x, y| y.cmp(x));
        std::iter::once(v[0]).chain(t).collect::<Vec<_>>()
    };
    (canon(a), canon(b))
}

/// Every split of `x` into tree-like `a` (length `p`) and `b` (length `q`)
/// with `a_1 + b_1 = x_1` and tails partitioning `x_2..x_n`, in canonical form.
pub fn exhaustive_split_search(x: &DegreeSequence, p: usize, q: usize) -> BTreeSet<(Vec<i64>, Vec<i64>)> {
    let v = x.entries();
    let n = v.len();
    let mut out = BTreeSet::new();
    if p == 0 || q == 0 || p + q != n + 1 {
        return out;
    }
    let tail = &v[1..];
    for mask in 0u64..(1u64 << tail.len()) {
        if mask.count_ones() as usize != p - 1 {
            continue;
        }
        let (mut ta, mut tb) = (Vec::new(), Vec::new());
        for (i, &e) in tail.iter().enumerate() {
            if mask >> i & 1 == 1 {
                ta.push(e);
            } else {
                tb.push(e);
            }
        }
        for a1 in 1..v[0] {
            let a: Vec<i64> = std::iter::once(a1).chain(ta.iter().copied()).collect();
            let b: Vec<i64> = std::iter::once(v[0] - a1).chain(tb.iter().copied()).collect();
            if oracle_tree_like(&a) && oracle_tree_like(&b) {
                out.insert(canonical_split(&a, &b));
            }
        }
    }
    out
}

/// For every word in `{0..n}^(n-2)`, the degree sequence it encodes
/// (occurrences plus one), with multiplicities.
pub fn prufer_degree_census(n: usize) -> BTreeMap<Vec<i64>, u64> {
    let mut census = BTreeMap::new();
    if n < 2 {
        return census;
    }
    let len = n - 2;
    let total = (n as u64).pow(len as u32);
    for code in 0..total {
        let mut deg = vec![1i64; n];
        let mut c = code;
        for _ in 0..len {
            deg[(c % n as u64) as usize] += 1;
            c /= n as u64;
        }
        *census.entry(deg).or_insert(0) += 1;
    }
    census
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub sweep: String,
    /// Largest size swept.
    pub n: usize,
    pub checked: u64,
    pub failed: u64,
    pub elapsed_ms: u128,
    pub per_n: Vec<SizeCount>,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SizeCount {
    pub n: usize,
    pub checked: u64,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

struct Collector {
    sweep: &'static str,
    n: usize,
    start: Instant,
    checked: u64,
    failed: u64,
    per_n: Vec<SizeCount>,
    failures: Vec<String>,
}

impl Collector {
    fn new(sweep: &'static str, n: usize) -> Self {
        Self {
            sweep,
            n,
            start: Instant::now(),
            checked: 0,
            failed: 0,
            per_n: Vec::new(),
            failures: Vec::new(),
        }
    }

    fn absorb(&mut self, n: usize, results: Vec<Option<String>>) {
        let checked = results.len() as u64;
        self.absorb_counts(n, checked, results.into_iter().flatten());
    }

    fn absorb_counts(&mut self, n: usize, checked: u64, failures: impl IntoIterator<Item = String>) {
        self.per_n.push(SizeCount { n, checked });
        self.checked += checked;
        for f in failures {
            self.failed += 1;
            if self.failures.len() < MAX_LISTED_FAILURES {
                self.failures.push(f);
            }
        }
    }

    fn finish(self) -> SweepReport {
        SweepReport {
            sweep: self.sweep.to_string(),
            n: self.n,
            checked: self.checked,
            failed: self.failed,
            elapsed_ms: self.start.elapsed().as_millis(),
            per_n: self.per_n,
            failures: self.failures,
        }
    }
}

/// Every ordered pair of tree-like sequences with `2 <= n <= n_max` is
/// realized and verified; both dual trees must carry degree sequences that
/// occur among Prüfer-encoded trees.
pub fn cross_check_pairs(n_max: usize, exec: Exec) -> SweepReport {
    let mut col = Collector::new("pairs", n_max);
    for n in 2..=n_max {
        let seqs: Vec<DegreeSequence> = enumerate_tree_like(n).collect();
        let census = prufer_degree_census(n);
        let items: Vec<(usize, usize)> = (0..seqs.len())
            .flat_map(|i| (0..seqs.len()).map(move |j| (i, j)))
            .collect();
        let results = exec::map(exec, &items, |&(i, j)| {
            let (x, y) = (&seqs[i], &seqs[j]);
            let cert = match realize_pair(x, y) {
                Ok(c) => c,
                Err(e) => return Some(format!("{x} / {y}: {e}")),
            };
            let v = verify_pair_certificate(&cert, x, y);
            if !v.is_valid() {
                return Some(format!("{x} / {y}: {}", v.problems.join("; ")));
            }
            if cert.circles.len() != n - 1 {
                return Some(format!("{x} / {y}: {} circles", cert.circles.len()));
            }
            for (tree, num) in [(&cert.tree_s, &cert.numbering_s), (&cert.tree_t, &cert.numbering_t)] {
                match degree_sequence_of_tree(tree, num) {
                    Ok(d) if census.contains_key(d.entries()) => {}
                    _ => return Some(format!("{x} / {y}: dual tree degrees not Prüfer-realizable")),
                }
            }
            None
        });
        col.absorb(n, results);
    }
    col.finish()
}

/// Realization succeeds exactly when both sequences are tree-like of equal
/// length, over all ordered pairs of positive sequences with length at
/// most `max_len` and sum at most `max_sum`.
pub fn cross_check_pair_decision(max_len: usize, max_sum: i64, exec: Exec) -> SweepReport {
    let mut col = Collector::new("pair_decision", max_len);
    let seqs = all_positive_sequences(max_len, max_sum);
    let results = exec::map(exec, &seqs, |x| {
        let mut bad = Vec::new();
        for y in &seqs {
            let expect = x.len() == y.len() && oracle_tree_like(x.entries()) && oracle_tree_like(y.entries());
            match realize_pair(x, y) {
                Ok(cert) if expect => {
                    if !verify_pair_certificate(&cert, x, y).is_valid() || cert.circles.len() + 1 != x.len() {
                        bad.push(format!("{x} / {y}: bad certificate"));
                    }
                }
                Ok(_) => bad.push(format!("{x} / {y}: realized but should not be")),
                Err(_) if expect => bad.push(format!("{x} / {y}: should be realizable")),
                Err(_) => {}
            }
        }
        bad
    });
    let checked = (seqs.len() * seqs.len()) as u64;
    col.absorb_counts(max_len, checked, results.into_iter().flatten());
    col.finish()
}

/// The reduction keeps both sequences tree-like and shortens them to
/// `n - y_1 + 1`, for every units-last pair with `x_1 >= y_1 >= 2`.
pub fn sweep_lemma1(n_max: usize, exec: Exec) -> SweepReport {
    let mut col = Collector::new("lemma1", n_max);
    for n in 3..=n_max {
        let seqs: Vec<DegreeSequence> = enumerate_tree_like(n).filter(|s| s.units_last()).collect();
        let items: Vec<(usize, usize)> = (0..seqs.len())
            .flat_map(|i| (0..seqs.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| seqs[i].head() >= seqs[j].head() && seqs[j].head() >= 2)
            .collect();
        let results = exec::map(exec, &items, |&(i, j)| {
            let (x, y) = (&seqs[i], &seqs[j]);
            let len = n - y.head() as usize + 1;
            match lemma1_reduce(x, y) {
                Ok((a, b)) if a.len() == len && b.len() == len && oracle_tree_like(a.entries()) && oracle_tree_like(b.entries()) => None,
                Ok((a, b)) => Some(format!("{x} / {y} -> {a} / {b}")),
                Err(e) => Some(format!("{x} / {y}: {e}")),
            }
        });
        col.absorb(n, results);
    }
    col.finish()
}

/// Every descending tree-like `x` and admissible `(p, q)`: the split has the
/// required head sum, tree-like halves, and is one of the brute-force splits.
pub fn sweep_lemma2(n_max: usize, exec: Exec) -> SweepReport {
    let mut col = Collector::new("lemma2", n_max);
    for n in 3..=n_max {
        let mut items = Vec::new();
        for x in enumerate_tree_like(n).filter(|s| s.is_sorted_desc()) {
            for q in 2..=n.div_ceil(2) {
                items.push((x.clone(), n + 1 - q, q));
            }
        }
        let results = exec::map(exec, &items, |(x, p, q)| {
            let (p, q) = (*p, *q);
            let split = match lemma2_split(x, p, q) {
                Ok(s) => s,
                Err(e) => return Some(format!("{x}, p = {p}: {e}")),
            };
            let (a, b) = (split.a.entries(), split.b.entries());
            let mut tails: Vec<i64> = a[1..].iter().chain(&b[1..]).copied().collect();
            tails.sort_unstable();
            let mut rest = x.entries()[1..].to_vec();
            rest.sort_unstable();
            let ok = a.len() == p
                && b.len() == q
                && a[0] + b[0] == x.head()
                && oracle_tree_like(a)
                && oracle_tree_like(b)
                && tails == rest
                && exhaustive_split_search(x, p, q).contains(&canonical_split(a, b));
            (!ok).then(|| format!("{x}, p = {p}, q = {q}: got {} / {}", split.a, split.b))
        });
        col.absorb(n, results);
    }
    col.finish()
}

/// Triples of tree-like sequences with each length in `2..=n_max`:
/// realization succeeds exactly when the length conditions hold, and every
/// certificate verifies.
pub fn cross_check_triples(n_max: usize, exec: Exec) -> SweepReport {
    let mut col = Collector::new("triples", n_max);
    let seqs: Vec<DegreeSequence> = (2..=n_max).flat_map(enumerate_tree_like).collect();
    let items: Vec<(usize, usize)> = (0..seqs.len())
        .flat_map(|i| (0..seqs.len()).map(move |j| (i, j)))
        .collect();
    let results = exec::map(exec, &items, |&(i, j)| {
        let mut bad = Vec::new();
        for c in &seqs {
            let (a, b) = (&seqs[i], &seqs[j]);
            let n = [a.len(), b.len(), c.len()];
            let expect = (n[0] + n[1] + n[2]) % 2 == 1
                && n[0] < n[1] + n[2]
                && n[1] < n[0] + n[2]
                && n[2] < n[0] + n[1];
            match realize_triple(a, b, c) {
                Ok(cert) if expect => {
                    let v = verify_triple_certificate(&cert, a, b, c);
                    let ones = cert.m.iter().filter(|&&m| m == 1).count();
                    let counts = cert.pairwise_circle_counts();
                    // f1∩f2, f1∩f3, f2∩f3
                    let identities = n[0] == counts[0] + counts[1] + 1
                        && n[1] == counts[0] + counts[2] + 1
                        && n[2] == counts[1] + counts[2] + 1;
                    if !v.is_valid() || ones > 1 || !identities {
                        bad.push(format!("{a} {b} {c}: {}", v.problems.join("; ")));
                    }
                }
                Ok(_) => bad.push(format!("{a} {b} {c}: realized but should not be")),
                Err(e) if expect => bad.push(format!("{a} {b} {c}: {e}")),
                Err(_) => {}
            }
        }
        bad
    });
    let checked = (items.len() * seqs.len()) as u64;
    col.absorb_counts(n_max, checked, results.into_iter().flatten());
    col.finish()
}

/// Sketches of every units-last tree-like `x`: circle count, labels assigned
/// by walking the sphere from the top, and the dual tree's degrees.
pub fn sweep_sketch(n_max: usize, exec: Exec) -> SweepReport {
    let mut col = Collector::new("sketch", n_max);
    for n in 2..=n_max {
        let seqs: Vec<DegreeSequence> = enumerate_tree_like(n).filter(|s| s.units_last()).collect();
        let results = exec::map(exec, &seqs, |x| {
            let s = match build_sketch(x) {
                Ok(s) => s,
                Err(e) => return Some(format!("{x}: {e}")),
            };
            if s.circles.len() != n - 1 {
                return Some(format!("{x}: {} circles", s.circles.len()));
            }
            // Walk top to bottom: main circle i+1, then x_{i+1} - 2 inner circles.
            let r = x.r_count();
            let mut expected = Vec::new();
            let mut label = 0usize;
            for i in 0..=r {
                label += 1;
                expected.push((label, CircleKind::Main, i + 1));
                if i < r {
                    for _ in 0..x.entries()[i] - 2 {
                        label += 1;
                        expected.push((label, CircleKind::Inner, i + 1));
                    }
                }
            }
            let got: Vec<_> = s.circles.iter().map(|c| (c.label, c.kind, c.tier)).collect();
            if got != expected {
                return Some(format!("{x}: labels {got:?}"));
            }
            let labels: BTreeSet<usize> = s.circles.iter().map(|c| c.label).collect();
            if labels != (1..n).collect() {
                return Some(format!("{x}: labels are not a bijection onto 1..{}", n - 1));
            }
            match sketch_dual_tree(&s).and_then(|(t, num)| degree_sequence_of_tree(&t, &num)) {
                Ok(d) if &d == x => None,
                Ok(d) => Some(format!("{x}: dual tree degrees {d}")),
                Err(e) => Some(format!("{x}: {e}")),
            }
        });
        col.absorb(n, results);
    }
    col.finish()
}

/// Labeled trees versus degree sequences for `2 <= n <= n_max`.
///
/// The census of all `n^(n-2)` Prüfer words must hit exactly the tree-like
/// sequences, with multiplicities equal to `(n-2)! / prod (d_i - 1)!`. The
/// lazy tree enumerator must agree in count and emit valid trees with the
/// requested degrees, and must emit nothing for non-tree-like input.
pub fn sweep_prufer(n_max: usize, exec: Exec) -> SweepReport {
    let mut col = Collector::new("prufer", n_max);
    for n in 2..=n_max {
        let census = prufer_degree_census(n);
        let mut items: Vec<Vec<i64>> = Compositions::new(n, 2 * n as i64 - 2).collect();
        for total in n as i64..=2 * n as i64 {
            if total != 2 * n as i64 - 2 {
                items.extend(Compositions::new(n, total));
            }
        }
        let mut results: Vec<Option<String>> = census
            .keys()
            .map(|d| (!oracle_tree_like(d)).then(|| format!("census produced {d:?}")))
            .collect();
        results.extend(exec::map(exec, &items, |d| {
            let seq = DegreeSequence::new(d.clone()).unwrap();
            let trees = enumerate_labeled_trees(&seq);
            let claimed = trees.total();
            if !oracle_tree_like(d) {
                let produced = trees.count();
                return (claimed != Some(0) || produced != 0 || census.contains_key(d))
                    .then(|| format!("{d:?}: non-tree-like but realized"));
            }
            let formula = factorial(n as u64 - 2)
                / d.iter().map(|&k| factorial(k as u64 - 1)).product::<u128>();
            let brute = census.get(d).copied().unwrap_or(0) as u128;
            let mut emitted = 0u128;
            for t in trees {
                match degree_sequence_of_tree(&t, &t.regions) {
                    Ok(got) if got.entries() == d.as_slice() => emitted += 1,
                    _ => return Some(format!("{d:?}: emitted a tree with wrong degrees")),
                }
            }
            (brute == 0 || brute != formula || claimed != Some(formula) || emitted != formula)
                .then(|| format!("{d:?}: census {brute}, formula {formula}, claimed {claimed:?}, emitted {emitted}"))
        }));
        let expected_seqs = binomial(2 * n as u64 - 3, n as u64 - 1) as usize;
        if census.len() != expected_seqs {
            results.push(Some(format!("n = {n}: census has {} sequences, expected {expected_seqs}", census.len())));
        }
        col.absorb(n, results);
    }
    col.finish()
}

/// Diagonal scenes for every tree-like `x` with `2 <= n <= n_max`.
pub fn sweep_mesh(n_max: usize, exec: Exec) -> SweepReport {
    let mut col = Collector::new("mesh", n_max);
    for n in 2..=n_max {
        let seqs: Vec<DegreeSequence> = enumerate_tree_like(n).collect();
        let results = exec::map(exec, &seqs, |x| match build_diagonal_scene(x) {
            Ok(scene) => {
                let v = validate_scene(&scene, x);
                (!v.is_valid() || scene.curves.len() != n - 1)
                    .then(|| format!("{x}: {}", v.problems.join("; ")))
            }
            Err(e) => Some(format!("{x}: {e}")),
        });
        col.absorb(n, results);
    }
    col.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqcore::seq;

    #[test]
    fn tree_like_enumeration() {
        let two: Vec<_> = enumerate_tree_like(2).collect();
        assert_eq!(two, vec![seq(&[1, 1])]);
        let three: Vec<_> = enumerate_tree_like(3).collect();
        assert_eq!(three, vec![seq(&[1, 1, 2]), seq(&[1, 2, 1]), seq(&[2, 1, 1])]);
        assert_eq!(enumerate_tree_like(4).count(), 10);
        assert_eq!(enumerate_tree_like(1).count(), 0);
        for n in 2..=10 {
            let all: Vec<_> = enumerate_tree_like(n).collect();
            assert_eq!(all.len() as u64, binomial(2 * n as u64 - 3, n as u64 - 1));
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            assert!(all.iter().all(|s| s.is_tree_like()));
        }
    }

    #[test]
    fn composition_counts() {
        for parts in 1..6 {
            for total in 0..10i64 {
                let expect = if total >= parts as i64 && parts >= 1 {
                    binomial(total as u64 - 1, parts as u64 - 1)
                } else {
                    0
                };
                assert_eq!(Compositions::new(parts, total).count() as u64, expect);
            }
        }
    }

    #[test]
    fn split_search_examples() {
        let set = exhaustive_split_search(&seq(&[3, 2, 1, 1, 1]), 3, 3);
        assert!(set.contains(&canonical_split(&[2, 1, 1], &[1, 2, 1])));
        assert!(exhaustive_split_search(&seq(&[1, 1]), 2, 1).is_empty());
        for n in 3..=8 {
            for x in enumerate_tree_like(n).filter(|s| s.is_sorted_desc()) {
                for q in 2..=n.div_ceil(2) {
                    assert!(!exhaustive_split_search(&x, n + 1 - q, q).is_empty(), "{x} q={q}");
                }
            }
        }
    }

    #[test]
    fn census_small() {
        let c = prufer_degree_census(4);
        assert_eq!(c.values().sum::<u64>(), 16);
        assert_eq!(c[&vec![3, 1, 1, 1]], 1);
        assert_eq!(c[&vec![2, 2, 1, 1]], 2);
    }

    #[test]
    fn small_sweeps_pass_in_both_modes() {
        for exec in [Exec::Sequential, Exec::Parallel] {
            let r = cross_check_pairs(4, exec);
            assert_eq!((r.checked, r.failed), (110, 0), "{:?}", r.failures);
            let r = cross_check_pairs(2, exec);
            assert_eq!((r.checked, r.failed), (1, 0));
            assert!(sweep_lemma1(7, exec).passed());
            assert!(sweep_lemma2(7, exec).passed());
            assert!(sweep_sketch(6, exec).passed());
            assert!(sweep_prufer(6, exec).passed());
            assert!(cross_check_triples(4, exec).passed());
            assert!(cross_check_pair_decision(4, 6, exec).passed());
            assert!(sweep_mesh(4, exec).passed());
        }
    }
}
