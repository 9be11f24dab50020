//! Wavefront OBJ text for rectilinear meshes.

use std::io::{self, Write};

use super::mesh::RectilinearMesh;
use crate::error::{Error, Result};

pub fn write_obj<W: Write>(mesh: &RectilinearMesh, mut out: W) -> io::Result<()> {
    writeln!(
        out,
        "# rectilinear mesh: {} vertices, {} faces",
        mesh.vertices.len(),
        mesh.faces.len()
    )?;
    for v in &mesh.vertices {
        writeln!(out, "v {} {} {}", v[0], v[1], v[2])?;
    }
    for f in &mesh.faces {
        writeln!(out, "f {} {} {} {}", f[0] + 1, f[1] + 1, f[2] + 1, f[3] + 1)?;
    }
    out.flush()
}

pub fn obj_string(mesh: &RectilinearMesh) -> String {
    let mut buf = Vec::new();
    write_obj(mesh, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("ascii")
}

/// Reads `v` and quad `f` records with integer coordinates. Texture and
/// normal indices (`f 1/1/1 ...`) are ignored.
pub fn read_obj(text: &str) -> Result<RectilinearMesh> {
    let mut mesh = RectilinearMesh::default();
    for (lineno, line) in text.lines().enumerate() {
        let bad = |what: &str| Error::InvalidInput(format!("line {}: {what}", lineno + 1));
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("v") => {
                let coords: Vec<i64> = parts
                    .map(|t| t.parse::<i64>().map_err(|_| bad("non-integer coordinate")))
                    .collect::<Result<_>>()?;
                let [x, y, z] = coords[..] else {
                    return Err(bad("vertex needs three coordinates"));
                };
                mesh.vertices.push([x, y, z]);
            }
            Some("f") => {
                let idx: Vec<u32> = parts
                    .map(|t| {
                        t.split('/')
                            .next()
                            .and_then(|i| i.parse::<u32>().ok())
                            .filter(|&i| i >= 1)
                            .map(|i| i - 1)
                            .ok_or_else(|| bad("bad face index"))
                    })
                    .collect::<Result<_>>()?;
                let [a, b, c, d] = idx[..] else {
                    return Err(bad("only quad faces are supported"));
                };
                mesh.faces.push([a, b, c, d]);
            }
            Some(t) if t.starts_with('#') => {}
            None => {}
            Some(_) => {}
        }
    }
    if let Some(&i) = mesh.faces.iter().flatten().find(|&&i| i as usize >= mesh.vertices.len()) {
        return Err(Error::InvalidInput(format!("face index {} out of range", i + 1)));
    }
    Ok(mesh)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_round_trip_is_byte_stable() {
        let m = RectilinearMesh::box_surface(2, 2, 2);
        let text = obj_string(&m);
        assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 26);
        assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 24);
        assert_eq!(text, obj_string(&RectilinearMesh::box_surface(2, 2, 2)));
        let back = read_obj(&text).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn reader_errors() {
        assert!(read_obj("v 1 2\n").is_err());
        assert!(read_obj("v 1 2 3\nf 1 2 3 9\n").is_err());
        assert!(read_obj("v 1.5 2 3\n").is_err());
        assert!(read_obj("v 0 0 0\nf 1 1 1\n").is_err());
        let m = read_obj("# c\nv 0 0 0\n\nvn 0 0 1\nf 1/1 1/1 1/1 1/1\n").unwrap();
        assert_eq!(m.faces, vec![[0, 0, 0, 0]]);
    }
}
