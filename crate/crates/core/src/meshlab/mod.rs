//! Exact rectilinear realization of a diagonal pair `(x, x)`.
//!
//! `f` is the surface of an integer box. A family of nested rectangles on
//! its top face realizes `x`: the dual tree from
//! [`tree_from_treelike`] is rooted at the region numbered 1, which takes
//! the rest of the box, and every other region is the inside of a rectangle
//! minus its children. Regions alternate white (root) and black by depth.
//!
//! `g` is the box pushed out by one unit, except over the top face, where it
//! is a height field: one unit above the top over white cells and one unit
//! below over black cells. Vertical walls between the two levels pass
//! through the top face exactly along the rectangles, so `f ∩ g` is the
//! rectangle family and nothing else. All coordinates are integers and
//! every check is exact.

mod mesh;
mod obj;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

pub use mesh::{edge_key, EdgeKey, Point, RectilinearMesh};
pub use obj::{obj_string, read_obj, write_obj};

use crate::dualtree::{tree_from_treelike, CircleId, Numbering, RegionId, RegionTree};
use crate::error::{Result, Verdict};
use crate::seqcore::DegreeSequence;

/// Gap between a rectangle and its parent's boundary, and between siblings.
const GAP: i64 = 2;
/// Side of a rectangle enclosing a disk region.
const LEAF_SIDE: i64 = 2;
/// Height of the box `f`.
const DEPTH: i64 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Color {
    Black,
    White,
}

impl Color {
    fn flip(self) -> Self {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

/// Closed rectangle `[x0, x1] × [y0, y1]` on the top face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rect {
    pub x0: i64,
    pub y0: i64,
    pub x1: i64,
    pub y1: i64,
}

impl Rect {
    /// Strict containment of a point given in doubled coordinates.
    fn contains2(&self, px2: i64, py2: i64) -> bool {
        2 * self.x0 < px2 && px2 < 2 * self.x1 && 2 * self.y0 < py2 && py2 < 2 * self.y1
    }
}

/// One intersection circle: a rectangle at the height of the top face.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Curve {
    pub circle: CircleId,
    /// The region enclosed by the rectangle.
    pub inside: RegionId,
    pub rect: Rect,
    /// Corners in order; the loop closes back to the first.
    pub corners: Vec<Point>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionColor {
    pub region: RegionId,
    pub color: Color,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagonalScene {
    pub x: DegreeSequence,
    /// Box `[0, w] × [0, h] × [0, d]`.
    pub dims: [i64; 3],
    pub tree: RegionTree,
    pub numbering: Numbering,
    pub root: RegionId,
    pub curves: Vec<Curve>,
    pub coloring: Vec<RegionColor>,
    pub mesh_f: RectilinearMesh,
    pub mesh_g: RectilinearMesh,
}

fn children_of(tree: &RegionTree, root: RegionId) -> BTreeMap<RegionId, Vec<(CircleId, RegionId)>> {
    let mut adj: BTreeMap<RegionId, Vec<(CircleId, RegionId)>> = BTreeMap::new();
    for e in &tree.edges {
        adj.entry(e.a).or_default().push((e.circle, e.b));
        adj.entry(e.b).or_default().push((e.circle, e.a));
    }
    let mut children: BTreeMap<RegionId, Vec<(CircleId, RegionId)>> = BTreeMap::new();
    let mut stack = vec![(root, None)];
    while let Some((r, parent)) = stack.pop() {
        let mut kids: Vec<(CircleId, RegionId)> = adj
            .get(&r)
            .into_iter()
            .flatten()
            .filter(|&&(_, o)| Some(o) != parent)
            .copied()
            .collect();
        kids.sort();
        for &(_, k) in kids.iter().rev() {
            stack.push((k, Some(r)));
        }
        children.insert(r, kids);
    }
    children
}

fn subtree_size(
    r: RegionId,
    children: &BTreeMap<RegionId, Vec<(CircleId, RegionId)>>,
    sizes: &mut BTreeMap<RegionId, (i64, i64)>,
) -> (i64, i64) {
    let kids = &children[&r];
    let size = if kids.is_empty() {
        (LEAF_SIDE, LEAF_SIDE)
    } else {
        let mut w = 2 * GAP + GAP * (kids.len() as i64 - 1);
        let mut h = 0;
        for &(_, k) in kids {
            let (kw, kh) = subtree_size(k, children, sizes);
            w += kw;
            h = h.max(kh);
        }
        (w, h + 2 * GAP)
    };
    sizes.insert(r, size);
    size
}

pub fn build_diagonal_scene(x: &DegreeSequence) -> Result<DiagonalScene> {
    let (tree, numbering) = tree_from_treelike(x)?;
    let root = numbering[0];
    let children = children_of(&tree, root);
    let mut sizes = BTreeMap::new();
    let (w, h) = subtree_size(root, &children, &mut sizes);

    // Depth-first placement, children left to right.
    let mut curves = Vec::with_capacity(tree.edges.len());
    let mut coloring = vec![RegionColor { region: root, color: Color::White }];
    let mut stack = vec![(root, 0i64, 0i64, Color::White)];
    while let Some((r, ox, oy, color)) = stack.pop() {
        let mut cx = ox + GAP;
        for &(circle, k) in &children[&r] {
            let (kw, kh) = sizes[&k];
            let rect = Rect { x0: cx, y0: oy + GAP, x1: cx + kw, y1: oy + GAP + kh };
            curves.push(Curve {
                circle,
                inside: k,
                rect,
                corners: vec![
                    [rect.x0, rect.y0, DEPTH],
                    [rect.x1, rect.y0, DEPTH],
                    [rect.x1, rect.y1, DEPTH],
                    [rect.x0, rect.y1, DEPTH],
                ],
            });
            coloring.push(RegionColor { region: k, color: color.flip() });
            stack.push((k, rect.x0, rect.y0, color.flip()));
            cx += kw + GAP;
        }
    }
    curves.sort_by_key(|c| c.circle);
    coloring.sort_by_key(|c| c.region);

    // Cell colors over [-1, w+1) × [-1, h+1); nested rectangles paint last.
    let color_of: BTreeMap<RegionId, Color> = coloring.iter().map(|c| (c.region, c.color)).collect();
    let mut by_depth: Vec<&Curve> = curves.iter().collect();
    by_depth.sort_by_key(|c| {
        // outer rectangles are larger, paint them first
        std::cmp::Reverse((c.rect.x1 - c.rect.x0) * (c.rect.y1 - c.rect.y0))
    });
    let cols = (w + 2) as usize;
    let mut cell = vec![Color::White; cols * (h + 2) as usize];
    for c in by_depth {
        for j in c.rect.y0..c.rect.y1 {
            for i in c.rect.x0..c.rect.x1 {
                cell[(j + 1) as usize * cols + (i + 1) as usize] = color_of[&c.inside];
            }
        }
    }
    let height = |i: i64, j: i64| match cell[(j + 1) as usize * cols + (i + 1) as usize] {
        Color::White => DEPTH + 1,
        Color::Black => DEPTH - 1,
    };

    let mesh_f = RectilinearMesh::box_surface(w, h, DEPTH);
    let mesh_g = RectilinearMesh::voxel_boundary([-1, -1, -1], [w + 1, h + 1, DEPTH + 1], |i, j, k| {
        k < height(i, j)
    });

    Ok(DiagonalScene {
        x: x.clone(),
        dims: [w, h, DEPTH],
        tree,
        numbering,
        root,
        curves,
        coloring,
        mesh_f,
        mesh_g,
    })
}

/// Exact `f ∩ g` for two meshes of unit squares.
///
/// Two closed grid squares that meet share a grid point, so candidates are
/// found through a vertex index. Coplanar overlaps are reported as errors;
/// otherwise the result is the set of shared unit edges plus isolated
/// contact points.
pub fn intersect_meshes(
    f: &RectilinearMesh,
    g: &RectilinearMesh,
) -> std::result::Result<(BTreeSet<EdgeKey>, BTreeSet<Point>), String> {
    let mut by_vertex: HashMap<Point, Vec<usize>> = HashMap::new();
    for gi in 0..g.faces.len() {
        for p in g.face_points(gi).ok_or("g has a face with a missing vertex")? {
            by_vertex.entry(p).or_default().push(gi);
        }
    }
    let mut edges = BTreeSet::new();
    let mut points = BTreeSet::new();
    for fi in 0..f.faces.len() {
        let corners = f.face_points(fi).ok_or("f has a face with a missing vertex")?;
        let mut cand: Vec<usize> = corners
            .iter()
            .flat_map(|p| by_vertex.get(p).into_iter().flatten().copied())
            .collect();
        cand.sort_unstable();
        cand.dedup();
        let (flo, fhi) = f.face_bounds(fi);
        for gi in cand {
            let (glo, ghi) = g.face_bounds(gi);
            let lo: Point = [0, 1, 2].map(|a| flo[a].max(glo[a]));
            let hi: Point = [0, 1, 2].map(|a| fhi[a].min(ghi[a]));
            if (0..3).any(|a| lo[a] > hi[a]) {
                continue;
            }
            match (0..3).filter(|&a| lo[a] < hi[a]).count() {
                0 => {
                    points.insert(lo);
                }
                1 => {
                    edges.insert(edge_key(lo, hi));
                }
                _ => return Err(format!("faces overlap in a patch at {lo:?}..{hi:?}")),
            }
        }
    }
    Ok((edges, points))
}

/// Unit edges along a closed rectilinear loop, or why it is not one.
fn expand_loop(corners: &[Point]) -> std::result::Result<Vec<EdgeKey>, String> {
    if corners.len() < 4 {
        return Err("loop has fewer than four corners".into());
    }
    let mut out = Vec::new();
    let mut visited = BTreeSet::new();
    for k in 0..corners.len() {
        let (a, b) = (corners[k], corners[(k + 1) % corners.len()]);
        let axes: Vec<usize> = (0..3).filter(|&i| a[i] != b[i]).collect();
        if axes.len() != 1 {
            return Err(format!("segment {a:?}-{b:?} is not axis-aligned"));
        }
        let ax = axes[0];
        let step = (b[ax] - a[ax]).signum();
        let mut p = a;
        while p != b {
            if !visited.insert(p) {
                return Err(format!("loop revisits {p:?}"));
            }
            let mut q = p;
            q[ax] += step;
            out.push(edge_key(p, q));
            p = q;
        }
    }
    Ok(out)
}

/// A connected piece of a mesh minus the intersection curves.
struct MeshRegion {
    faces: Vec<usize>,
    /// Indices of the curves on its boundary.
    curves: BTreeSet<usize>,
}

fn split_regions(mesh: &RectilinearMesh, cut: &HashMap<EdgeKey, usize>) -> Vec<MeshRegion> {
    let mut by_edge: HashMap<EdgeKey, Vec<usize>> = HashMap::new();
    for f in 0..mesh.faces.len() {
        for (a, b) in mesh.face_edges(f) {
            by_edge.entry(edge_key(a, b)).or_default().push(f);
        }
    }
    let mut label = vec![usize::MAX; mesh.faces.len()];
    let mut regions = Vec::new();
    for start in 0..mesh.faces.len() {
        if label[start] != usize::MAX {
            continue;
        }
        let id = regions.len();
        let mut region = MeshRegion { faces: vec![], curves: BTreeSet::new() };
        label[start] = id;
        let mut stack = vec![start];
        while let Some(f) = stack.pop() {
            region.faces.push(f);
            for (a, b) in mesh.face_edges(f) {
                let key = edge_key(a, b);
                if let Some(&c) = cut.get(&key) {
                    region.curves.insert(c);
                    continue;
                }
                for &g in &by_edge[&key] {
                    if label[g] == usize::MAX {
                        label[g] = id;
                        stack.push(g);
                    }
                }
            }
        }
        regions.push(region);
    }
    regions
}

/// Exact region census of one side of a scene.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SideSummary {
    pub faces: usize,
    pub vertices: usize,
    pub euler_characteristic: i64,
    /// Region degrees, descending.
    pub region_degrees: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SceneSummary {
    pub x: DegreeSequence,
    pub dims: [i64; 3],
    pub curves: usize,
    pub f: SideSummary,
    pub g: SideSummary,
    pub coloring: Vec<RegionColor>,
    pub valid: bool,
    pub problems: Vec<String>,
}

fn cut_map(scene: &DiagonalScene) -> std::result::Result<HashMap<EdgeKey, usize>, String> {
    let mut cut = HashMap::new();
    for (i, c) in scene.curves.iter().enumerate() {
        for e in expand_loop(&c.corners).map_err(|m| format!("curve {}: {m}", c.circle.0))? {
            if cut.insert(e, i).is_some() {
                return Err(format!("curve {} touches another curve", c.circle.0));
            }
        }
    }
    Ok(cut)
}

fn side_summary(mesh: &RectilinearMesh, cut: &HashMap<EdgeKey, usize>) -> SideSummary {
    let mut region_degrees: Vec<i64> = split_regions(mesh, cut)
        .iter()
        .map(|r| r.curves.len() as i64)
        .collect();
    region_degrees.sort_unstable_by(|a, b| b.cmp(a));
    SideSummary {
        faces: mesh.faces.len(),
        vertices: mesh.vertices.len(),
        euler_characteristic: mesh.euler_characteristic(),
        region_degrees,
    }
}

pub fn summarize_scene(scene: &DiagonalScene) -> SceneSummary {
    let verdict = validate_scene(scene, &scene.x);
    let cut = cut_map(scene).unwrap_or_default();
    SceneSummary {
        x: scene.x.clone(),
        dims: scene.dims,
        curves: scene.curves.len(),
        f: side_summary(&scene.mesh_f, &cut),
        g: side_summary(&scene.mesh_g, &cut),
        coloring: scene.coloring.clone(),
        valid: verdict.is_valid(),
        problems: verdict.problems,
    }
}

/// Checks a scene from scratch: both meshes are spheres, their exact
/// intersection is precisely the stored curves, each side splits into
/// regions with the degree multiset of `x`, the coloring is proper, and
/// black parts of `g` lie strictly inside the box while white parts lie
/// strictly outside.
pub fn validate_scene(scene: &DiagonalScene, x: &DegreeSequence) -> Verdict {
    let mut v = Verdict::default();
    for (name, m) in [("f", &scene.mesh_f), ("g", &scene.mesh_g)] {
        if let Err(e) = m.check_sphere() {
            v.fail(format!("mesh {name}: {e}"));
        }
    }
    if !v.is_valid() {
        return v;
    }
    let n = x.len();
    v.check(scene.curves.len() + 1 == n, || {
        format!("{} curves, expected {}", scene.curves.len(), n - 1)
    });

    let cut = match cut_map(scene) {
        Ok(c) => c,
        Err(e) => {
            v.fail(e);
            return v;
        }
    };
    let curve_points: BTreeSet<Point> = cut.keys().flat_map(|&(a, b)| [a, b]).collect();
    let mut curve_vertex_owner: HashMap<Point, usize> = HashMap::new();
    for (&(a, b), &i) in &cut {
        for p in [a, b] {
            if let Some(&j) = curve_vertex_owner.get(&p) {
                if j != i {
                    v.fail(format!("curves {} and {} share a point", j, i));
                }
            }
            curve_vertex_owner.insert(p, i);
        }
    }

    match intersect_meshes(&scene.mesh_f, &scene.mesh_g) {
        Ok((edges, points)) => {
            let stored: BTreeSet<EdgeKey> = cut.keys().copied().collect();
            v.check(edges == stored, || {
                format!(
                    "f ∩ g has {} unit edges, curves have {}",
                    edges.len(),
                    stored.len()
                )
            });
            v.check(points.iter().all(|p| curve_points.contains(p)), || {
                "f and g touch at a point off the curves".into()
            });
        }
        Err(e) => v.fail(e),
    }

    let expected = {
        let mut m = x.multiset();
        m.reverse();
        m
    };
    let f_regions = split_regions(&scene.mesh_f, &cut);
    let g_regions = split_regions(&scene.mesh_g, &cut);
    for (name, regions) in [("f", &f_regions), ("g", &g_regions)] {
        let mut got: Vec<i64> = regions.iter().map(|r| r.curves.len() as i64).collect();
        got.sort_unstable_by(|a, b| b.cmp(a));
        v.check(got == expected, || {
            format!("{name} regions have degrees {got:?}, expected {expected:?}")
        });
    }

    // Coloring: proper on the tree, white root.
    let color: BTreeMap<RegionId, Color> = scene.coloring.iter().map(|c| (c.region, c.color)).collect();
    v.check(color.get(&scene.root) == Some(&Color::White), || "root region is not white".into());
    for e in &scene.tree.edges {
        match (color.get(&e.a), color.get(&e.b)) {
            (Some(a), Some(b)) if a != b => {}
            _ => v.fail(format!("circle {} separates regions of equal or missing color", e.circle.0)),
        }
    }

    // Each region of g sits over one tree region and on the side its color demands.
    let [w, h, d] = scene.dims;
    let strictly_inside = |c: Point| 0 < c[0] && c[0] < 2 * w && 0 < c[1] && c[1] < 2 * h && 0 < c[2] && c[2] < 2 * d;
    let strictly_outside = |c: Point| c[0] < 0 || c[0] > 2 * w || c[1] < 0 || c[1] > 2 * h || c[2] < 0 || c[2] > 2 * d;
    let mut claimed = BTreeSet::new();
    for (i, reg) in g_regions.iter().enumerate() {
        let probe = reg.faces.iter().copied().find(|&f| {
            let (lo, hi) = scene.mesh_g.face_bounds(f);
            lo[2] == hi[2] && (lo[2] == d + 1 || lo[2] == d - 1)
        });
        let Some(probe) = probe else {
            v.fail(format!("g region {i} has no face near the top"));
            continue;
        };
        let c = scene.mesh_g.face_center2(probe);
        let owner = scene
            .curves
            .iter()
            .filter(|cv| cv.rect.contains2(c[0], c[1]))
            .min_by_key(|cv| (cv.rect.x1 - cv.rect.x0) * (cv.rect.y1 - cv.rect.y0))
            .map_or(scene.root, |cv| cv.inside);
        if !claimed.insert(owner) {
            v.fail(format!("two regions of g lie over region {}", owner.0));
        }
        let want = color.get(&owner).copied();
        let all_in = reg.faces.iter().all(|&f| strictly_inside(scene.mesh_g.face_center2(f)));
        let all_out = reg.faces.iter().all(|&f| strictly_outside(scene.mesh_g.face_center2(f)));
        match want {
            Some(Color::Black) if all_in => {}
            Some(Color::White) if all_out => {}
            _ => v.fail(format!(
                "g region over tree region {} is {:?} but lies {}",
                owner.0,
                want,
                if all_in { "inside" } else if all_out { "outside" } else { "on both sides" }
            )),
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqcore::seq;

    #[test]
    fn single_rectangle() {
        let s = build_diagonal_scene(&seq(&[1, 1])).unwrap();
        assert_eq!(s.curves.len(), 1);
        assert!(validate_scene(&s, &s.x).is_valid());
        let sum = summarize_scene(&s);
        assert_eq!(sum.f.region_degrees, vec![1, 1]);
        assert_eq!(sum.g.region_degrees, vec![1, 1]);
    }

    #[test]
    fn path_of_three() {
        let x = seq(&[2, 1, 1]);
        let s = build_diagonal_scene(&x).unwrap();
        assert_eq!(s.curves.len(), 2);
        let v = validate_scene(&s, &x);
        assert!(v.is_valid(), "{:?}", v.problems);
        assert_eq!(summarize_scene(&s).f.region_degrees, vec![2, 1, 1]);
    }

    #[test]
    fn star_is_three_siblings() {
        let x = seq(&[3, 1, 1, 1]);
        let s = build_diagonal_scene(&x).unwrap();
        assert_eq!(s.curves.len(), 3);
        // all three rectangles sit directly in the outer region
        assert!(s.curves.iter().all(|c| c.rect.y0 == GAP));
        let ys: Vec<i64> = s.curves.iter().map(|c| c.rect.x0).collect();
        assert_eq!(ys, vec![2, 6, 10]);
        assert!(validate_scene(&s, &x).is_valid());
        assert_eq!(summarize_scene(&s).g.region_degrees, vec![3, 1, 1, 1]);
    }

    #[test]
    fn nested_layout_validates() {
        for v in [vec![2, 2, 2, 1, 1, 1, 1, 4], vec![1, 3, 1, 2, 1]] {
            let x = seq(&v);
            let s = build_diagonal_scene(&x).unwrap();
            let verdict = validate_scene(&s, &x);
            assert!(verdict.is_valid(), "{x}: {:?}", verdict.problems);
        }
    }

    #[test]
    fn tampering_is_caught() {
        let x = seq(&[2, 2, 1, 1]);
        let good = build_diagonal_scene(&x).unwrap();

        let mut s = good.clone();
        s.mesh_g.faces.remove(5);
        assert!(!validate_scene(&s, &x).is_valid());

        let mut s = good.clone();
        let leaf = s.coloring.iter().position(|c| c.region != s.root).unwrap();
        s.coloring[leaf].color = s.coloring[leaf].color.flip();
        assert!(!validate_scene(&s, &x).is_valid());

        let mut s = good.clone();
        s.curves.pop();
        assert!(!validate_scene(&s, &x).is_valid());

        let mut s = good.clone();
        s.curves[0].corners[1][0] += 1;
        assert!(!validate_scene(&s, &x).is_valid());

        assert!(!validate_scene(&good, &seq(&[3, 1, 1, 1])).is_valid());
    }

    #[test]
    fn coplanar_overlap_is_reported() {
        let a = RectilinearMesh::box_surface(2, 2, 2);
        let b = RectilinearMesh::voxel_boundary([0, 0, 0], [3, 3, 3], |i, j, k| i < 2 && j < 2 && k < 1);
        assert!(intersect_meshes(&a, &b).is_err());
    }

    #[test]
    fn mesh_files_round_trip() {
        let s = build_diagonal_scene(&seq(&[1, 1])).unwrap();
        let back = read_obj(&obj_string(&s.mesh_f)).unwrap();
        assert_eq!(back, s.mesh_f);
        let g = read_obj(&obj_string(&s.mesh_g)).unwrap();
        assert_eq!(g.euler_characteristic(), 2);
        g.check_sphere().unwrap();
    }

    #[test]
    fn unrealizable_input() {
        assert!(build_diagonal_scene(&seq(&[2, 2])).is_err());
    }
}
