use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

pub type Point = [i64; 3];

/// A closed surface made of unit axis-aligned squares on the integer grid.
/// Faces list their four corners counter-clockwise seen from outside.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RectilinearMesh {
    pub vertices: Vec<Point>,
    pub faces: Vec<[u32; 4]>,
}

/// Unordered grid edge, endpoints sorted.
pub type EdgeKey = (Point, Point);

pub fn edge_key(a: Point, b: Point) -> EdgeKey {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl RectilinearMesh {
    /// Boundary of the union of unit voxels `[i,i+1]×[j,j+1]×[k,k+1]` for
    /// which `inside(i, j, k)` holds, over the index box `lo..hi`.
    pub fn voxel_boundary(lo: Point, hi: Point, inside: impl Fn(i64, i64, i64) -> bool) -> Self {
        let mut b = Builder::default();
        let inside_box = |i: i64, j: i64, k: i64| {
            (lo[0]..hi[0]).contains(&i)
                && (lo[1]..hi[1]).contains(&j)
                && (lo[2]..hi[2]).contains(&k)
                && inside(i, j, k)
        };
        for k in lo[2]..hi[2] {
            for j in lo[1]..hi[1] {
                for i in lo[0]..hi[0] {
                    if !inside_box(i, j, k) {
                        continue;
                    }
                    let (x, y, z) = (i, j, k);
                    if !inside_box(i - 1, j, k) {
                        b.face([[x, y, z], [x, y, z + 1], [x, y + 1, z + 1], [x, y + 1, z]]);
                    }
                    if !inside_box(i + 1, j, k) {
                        let x = x + 1;
                        b.face([[x, y, z], [x, y + 1, z], [x, y + 1, z + 1], [x, y, z + 1]]);
                    }
                    if !inside_box(i, j - 1, k) {
                        b.face([[x, y, z], [x + 1, y, z], [x + 1, y, z + 1], [x, y, z + 1]]);
                    }
                    if !inside_box(i, j + 1, k) {
                        let y = y + 1;
                        b.face([[x, y, z], [x, y, z + 1], [x + 1, y, z + 1], [x + 1, y, z]]);
                    }
                    if !inside_box(i, j, k - 1) {
                        b.face([[x, y, z], [x, y + 1, z], [x + 1, y + 1, z], [x + 1, y, z]]);
                    }
                    if !inside_box(i, j, k + 1) {
                        let z = z + 1;
                        b.face([[x, y, z], [x + 1, y, z], [x + 1, y + 1, z], [x, y + 1, z]]);
                    }
                }
            }
        }
        b.mesh
    }

    /// Boundary of the box `[0,w]×[0,h]×[0,d]`.
    pub fn box_surface(w: i64, h: i64, d: i64) -> Self {
        Self::voxel_boundary([0, 0, 0], [w, h, d], |_, _, _| true)
    }

    pub fn face_points(&self, f: usize) -> Option<[Point; 4]> {
        let idx = self.faces.get(f)?;
        let mut out = [[0; 3]; 4];
        for (o, &i) in out.iter_mut().zip(idx) {
            *o = *self.vertices.get(i as usize)?;
        }
        Some(out)
    }

    /// Directed boundary edges of face `f`.
    pub fn face_edges(&self, f: usize) -> [(Point, Point); 4] {
        let p = self.face_points(f).expect("checked face");
        [(p[0], p[1]), (p[1], p[2]), (p[2], p[3]), (p[3], p[0])]
    }

    /// Axis-aligned bounding box of a face.
    pub fn face_bounds(&self, f: usize) -> (Point, Point) {
        let p = self.face_points(f).expect("checked face");
        let mut lo = p[0];
        let mut hi = p[0];
        for q in &p[1..] {
            for a in 0..3 {
                lo[a] = lo[a].min(q[a]);
                hi[a] = hi[a].max(q[a]);
            }
        }
        (lo, hi)
    }

    /// Twice the face center, so it stays integral.
    pub fn face_center2(&self, f: usize) -> Point {
        let (lo, hi) = self.face_bounds(f);
        [lo[0] + hi[0], lo[1] + hi[1], lo[2] + hi[2]]
    }

    pub fn euler_characteristic(&self) -> i64 {
        let mut edges = std::collections::HashSet::new();
        for f in 0..self.faces.len() {
            for (a, b) in self.face_edges(f) {
                edges.insert(edge_key(a, b));
            }
        }
        self.vertices.len() as i64 - edges.len() as i64 + self.faces.len() as i64
    }

    /// Checks that the mesh is a closed, consistently oriented, connected
    /// 2-manifold of Euler characteristic 2 built from unit grid squares.
    pub fn check_sphere(&self) -> Result<(), String> {
        if self.faces.is_empty() {
            return Err("no faces".into());
        }
        let mut used = vec![false; self.vertices.len()];
        for (f, idx) in self.faces.iter().enumerate() {
            let Some(p) = self.face_points(f) else {
                return Err(format!("face {f} references a missing vertex"));
            };
            for &i in idx {
                used[i as usize] = true;
            }
            let (lo, hi) = self.face_bounds(f);
            let extents: Vec<i64> = (0..3).map(|a| hi[a] - lo[a]).collect();
            let mut sorted = extents.clone();
            sorted.sort();
            if sorted != [0, 1, 1] {
                return Err(format!("face {f} is not a unit axis-aligned square"));
            }
            for k in 0..4 {
                let (a, b) = (p[k], p[(k + 1) % 4]);
                let steps: i64 = (0..3).map(|ax| (a[ax] - b[ax]).abs()).sum();
                if steps != 1 {
                    return Err(format!("face {f} corners are not in cyclic order"));
                }
            }
        }
        if used.iter().any(|u| !u) {
            return Err("unused vertex".into());
        }
        let mut seen = HashMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if seen.insert(*v, i).is_some() {
                return Err(format!("duplicate vertex {v:?}"));
            }
        }

        // Each undirected edge: exactly one face in each direction.
        let mut directed: HashMap<(Point, Point), usize> = HashMap::new();
        for f in 0..self.faces.len() {
            for (a, b) in self.face_edges(f) {
                if directed.insert((a, b), f).is_some() {
                    return Err(format!("edge {a:?}->{b:?} used twice in the same direction"));
                }
            }
        }
        for &(a, b) in directed.keys() {
            if !directed.contains_key(&(b, a)) {
                return Err(format!("open or inconsistently oriented edge {a:?}-{b:?}"));
            }
        }

        // Around every vertex the faces must form one fan.
        let mut around: BTreeMap<Point, Vec<usize>> = BTreeMap::new();
        for f in 0..self.faces.len() {
            for p in self.face_points(f).unwrap() {
                around.entry(p).or_default().push(f);
            }
        }
        for (v, faces) in &around {
            let mut parent: HashMap<usize, usize> = faces.iter().map(|&f| (f, f)).collect();
            fn find(p: &mut HashMap<usize, usize>, mut x: usize) -> usize {
                while p[&x] != x {
                    x = p[&x];
                }
                x
            }
            for &f in faces {
                for (a, b) in self.face_edges(f) {
                    if a == *v || b == *v {
                        let g = directed[&(b, a)];
                        let (rf, rg) = (find(&mut parent, f), find(&mut parent, g));
                        parent.insert(rf, rg);
                    }
                }
            }
            let roots: std::collections::HashSet<usize> =
                faces.iter().map(|&f| find(&mut parent, f)).collect();
            if roots.len() != 1 {
                return Err(format!("non-manifold vertex {v:?}"));
            }
        }

        // Connected.
        let mut comp = vec![usize::MAX; self.faces.len()];
        let mut stack = vec![0];
        comp[0] = 0;
        while let Some(f) = stack.pop() {
            for (a, b) in self.face_edges(f) {
                let g = directed[&(b, a)];
                if comp[g] == usize::MAX {
                    comp[g] = 0;
                    stack.push(g);
                }
            }
        }
        if comp.contains(&usize::MAX) {
            return Err("surface is disconnected".into());
        }

        let chi = self.euler_characteristic();
        if chi != 2 {
            return Err(format!("Euler characteristic {chi}, expected 2"));
        }
        Ok(())
    }
}

#[derive(Default)]
struct Builder {
    mesh: RectilinearMesh,
    index: HashMap<Point, u32>,
}

impl Builder {
    fn vertex(&mut self, p: Point) -> u32 {
        let next = self.mesh.vertices.len() as u32;
        *self.index.entry(p).or_insert_with(|| {
            self.mesh.vertices.push(p);
            next
        })
    }

    fn face(&mut self, corners: [Point; 4]) {
        let idx = corners.map(|p| self.vertex(p));
        self.mesh.faces.push(idx);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_is_a_sphere() {
        let m = RectilinearMesh::box_surface(2, 2, 2);
        assert_eq!(m.faces.len(), 24);
        assert_eq!(m.vertices.len(), 26);
        assert_eq!(m.euler_characteristic(), 2);
        m.check_sphere().unwrap();
    }

    #[test]
    fn outward_orientation() {
        // +z face of a single voxel has normal (0,0,1).
        let m = RectilinearMesh::box_surface(1, 1, 1);
        for f in 0..m.faces.len() {
            let p = m.face_points(f).unwrap();
            let u = [p[1][0] - p[0][0], p[1][1] - p[0][1], p[1][2] - p[0][2]];
            let v = [p[2][0] - p[1][0], p[2][1] - p[1][1], p[2][2] - p[1][2]];
            let n = [
                u[1] * v[2] - u[2] * v[1],
                u[2] * v[0] - u[0] * v[2],
                u[0] * v[1] - u[1] * v[0],
            ];
            let c = m.face_center2(f);
            // center minus cube center (1,1,1 in doubled coords) points outward
            let out = [c[0] - 1, c[1] - 1, c[2] - 1];
            assert_eq!(n[0] * out[0] + n[1] * out[1] + n[2] * out[2], 1);
        }
    }

    #[test]
    fn detects_defects() {
        let mut m = RectilinearMesh::box_surface(2, 1, 1);
        m.faces.pop();
        assert!(m.check_sphere().unwrap_err().contains("edge"));

        let mut m = RectilinearMesh::box_surface(1, 1, 1);
        m.faces[0].reverse();
        assert!(m.check_sphere().is_err());

        // Two voxels touching along an edge only.
        let m = RectilinearMesh::voxel_boundary([0, 0, 0], [2, 2, 1], |i, j, _| i == j);
        assert!(m.check_sphere().is_err());

        // Hollow 3x3x1 ring: a torus.
        let m = RectilinearMesh::voxel_boundary([0, 0, 0], [3, 3, 1], |i, j, _| !(i == 1 && j == 1));
        let err = m.check_sphere().unwrap_err();
        assert!(err.contains("Euler"), "{err}");
    }
}
