//! Canonical nested circle families ("sketches") realizing a tree-like
//! sequence whose units come last.
//!
//! `r + 1` main circles are stacked from the top of the sphere, cutting it
//! into a top disk, `r` annuli and a bottom disk. Annulus `i` additionally
//! holds `x_i - 2` small disjoint circles, so its boundary has exactly `x_i`
//! circles. Labels `A_1 .. A_{n-1}` run top to bottom: each main circle,
//! then the small circles of the annulus below it.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::dualtree::{CircleId, Numbering, RegionId, RegionTree};
use crate::error::{Error, Result};
use crate::seqcore::DegreeSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CircleKind {
    Main,
    Inner,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SketchCircle {
    /// `j` in `A_j`, in `1..=n-1`.
    pub label: usize,
    pub kind: CircleKind,
    /// Main circles: position from the top, `1..=r+1`. Inner circles: the
    /// annulus they sit in, `1..=r`.
    pub tier: usize,
    /// Label of the circle immediately enclosing this one (towards the
    /// top), or `None` for the outermost main circle.
    pub parent: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sketch {
    pub x: DegreeSequence,
    /// Sorted by label.
    pub circles: Vec<SketchCircle>,
}

pub fn build_sketch(x: &DegreeSequence) -> Result<Sketch> {
    if !x.is_tree_like() {
        return Err(Error::Precondition(format!("{x} is not tree-like")));
    }
    if !x.units_last() {
        return Err(Error::Precondition(format!(
            "{x} has units before larger entries; normalize first"
        )));
    }
    let v = x.entries();
    let r = x.r_count();
    // prefix[i] = x_1 + ... + x_i, with prefix[0] = 0
    let mut prefix = vec![0i64; r + 1];
    for i in 0..r {
        prefix[i + 1] = prefix[i] + v[i];
    }
    let main_label = |i: usize| (prefix[i] - i as i64 + 1) as usize;

    let mut circles = Vec::with_capacity(x.len() - 1);
    for i in 0..=r {
        // (i+1)-st main circle
        circles.push(SketchCircle {
            label: main_label(i),
            kind: CircleKind::Main,
            tier: i + 1,
            parent: (i > 0).then(|| main_label(i - 1)),
        });
        if i < r {
            let first = prefix[i] - i as i64 + 2;
            let last = prefix[i + 1] - (i as i64 + 1);
            for label in first..=last {
                circles.push(SketchCircle {
                    label: label as usize,
                    kind: CircleKind::Inner,
                    tier: i + 1,
                    parent: Some(main_label(i)),
                });
            }
        }
    }
    circles.sort_by_key(|c| c.label);
    Ok(Sketch { x: x.clone(), circles })
}

impl Sketch {
    pub fn circle(&self, label: usize) -> Option<&SketchCircle> {
        self.circles.iter().find(|c| c.label == label)
    }

    pub fn r(&self) -> usize {
        self.circles.iter().filter(|c| c.kind == CircleKind::Main).count() - 1
    }

    pub fn region_degrees(&self) -> Result<Vec<i64>> {
        let (tree, numbering) = sketch_dual_tree(self)?;
        let deg = tree.degrees();
        Ok(numbering.iter().map(|r| deg[r] as i64).collect())
    }

    /// Rounded concentric rectangles for the main circles, small squares for
    /// the inner ones.
    pub fn to_svg(&self) -> String {
        const BAND: i64 = 24;
        const SQ: i64 = 12;
        const STEP: i64 = 18;
        const PAD: i64 = 10;
        let r = self.r() as i64;
        let inner_in = |tier: i64| {
            self.circles
                .iter()
                .filter(|c| c.kind == CircleKind::Inner && c.tier as i64 == tier)
                .count() as i64
        };
        let mut width = 2 * r * BAND + 2 * BAND;
        for t in 1..=r {
            width = width.max(2 * (t - 1) * BAND + inner_in(t) * STEP + BAND);
        }
        let height = 2 * r * BAND + 2 * BAND;

        let mut out = String::new();
        writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
            width + 2 * PAD,
            height + 2 * PAD,
            width + 2 * PAD,
            height + 2 * PAD
        )
        .unwrap();
        writeln!(out, r#"<g fill="none" stroke="black" stroke-width="1.5" font-family="sans-serif" font-size="9">"#).unwrap();
        for c in &self.circles {
            match c.kind {
                CircleKind::Main => {
                    let inset = (c.tier as i64 - 1) * BAND;
                    let (x0, y0) = (PAD + inset, PAD + inset);
                    let (w, h) = (width - 2 * inset, height - 2 * inset);
                    writeln!(
                        out,
                        r#"<rect x="{x0}" y="{y0}" width="{w}" height="{h}" rx="8"/><text x="{}" y="{}" stroke="none" fill="black">A{}</text>"#,
                        x0 + w - 22,
                        y0 + 11,
                        c.label
                    )
                    .unwrap();
                }
                CircleKind::Inner => {
                    let inset = (c.tier as i64 - 1) * BAND;
                    let k = self
                        .circles
                        .iter()
                        .filter(|d| d.kind == CircleKind::Inner && d.tier == c.tier && d.label < c.label)
                        .count() as i64;
                    let x0 = PAD + inset + BAND / 4 + k * STEP;
                    let y0 = PAD + inset + BAND / 4;
                    writeln!(
                        out,
                        r#"<rect x="{x0}" y="{y0}" width="{SQ}" height="{SQ}" rx="3"/><text x="{x0}" y="{}" stroke="none" fill="black">A{}</text>"#,
                        y0 + SQ + 8,
                        c.label
                    )
                    .unwrap();
                }
            }
        }
        out.push_str("</g>\n</svg>\n");
        out
    }
}

/// Dual tree of a sketch, derived from its nesting forest.
///
/// Region 0 lies outside every circle (the top disk); region `j` is the part
/// of the sphere just inside circle `A_j`. The numbering puts annulus `i`
/// (the region inside the `i`-th main circle, `i <= r`) at index `i` and the
/// disks after it: top disk first, then by label.
pub fn sketch_dual_tree(s: &Sketch) -> Result<(RegionTree, Numbering)> {
    let mut tree = RegionTree {
        regions: std::iter::once(RegionId(0))
            .chain(s.circles.iter().map(|c| RegionId(c.label as u32)))
            .collect(),
        edges: Vec::with_capacity(s.circles.len()),
    };
    for c in &s.circles {
        let outside = RegionId(c.parent.unwrap_or(0) as u32);
        tree.add_edge(CircleId(c.label as u32), RegionId(c.label as u32), outside);
    }
    tree.validate()?;

    let r = s.r();
    let mut annuli: Vec<&SketchCircle> = s
        .circles
        .iter()
        .filter(|c| c.kind == CircleKind::Main && c.tier <= r)
        .collect();
    annuli.sort_by_key(|c| c.tier);
    let mut numbering: Numbering = annuli.iter().map(|c| RegionId(c.label as u32)).collect();
    numbering.push(RegionId(0));
    for c in &s.circles {
        let id = RegionId(c.label as u32);
        if !numbering.contains(&id) {
            numbering.push(id);
        }
    }
    Ok((tree, numbering))
}

/// Whether the simultaneous embedding of two sketches is asserted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EmbeddingNote {
    /// Equal lengths: an embedding pair with `F(A_i) = G(B_i)` is claimed
    /// to exist. Nothing here checks that claim.
    ClaimedUnverified,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SketchPair {
    pub a: Sketch,
    pub b: Sketch,
    pub embedding: EmbeddingNote,
}

pub fn pair_sketches(x: &DegreeSequence, y: &DegreeSequence) -> Result<SketchPair> {
    let a = build_sketch(x)?;
    let b = build_sketch(y)?;
    let embedding = if x.len() == y.len() {
        EmbeddingNote::ClaimedUnverified
    } else {
        EmbeddingNote::NotApplicable
    };
    Ok(SketchPair { a, b, embedding })
}
