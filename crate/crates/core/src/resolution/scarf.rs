//! Scarf complex: the faces of the Taylor complex whose lcm is attained by
//! no other face. For generic ideals it supports the minimal resolution.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

use super::{boundary_sign, face_lcm, MultigradedMatrix, Resolution};

fn is_scarf(gens: &[Monomial], face: &[usize]) -> bool {
    let l = face_lcm(gens, face);
    // no outside generator divides the lcm
    let outside = (0..gens.len()).filter(|k| !face.contains(k)).any(|k| gens[k].divides(l));
    if outside {
        return false;
    }
    // no facet has the same lcm
    (0..face.len()).all(|skip| {
        let rest: Vec<usize> = face.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &g)| g).collect();
        face_lcm(gens, &rest) != l
    })
}

/// Scarf faces of sizes 1, 2 and 3 in dictionary order.
pub fn scarf_faces(ideal: &MonomialIdeal) -> [Vec<Vec<usize>>; 3] {
    let g = ideal.generators();
    let n = g.len();
    let vertices: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).filter(|f| is_scarf(g, f)).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if is_scarf(g, &[i, j]) {
                edges.push(vec![i, j]);
            }
        }
    }
    let mut triangles = Vec::new();
    for e in &edges {
        for k in (e[1] + 1)..n {
            let f = [e[0], e[1], k];
            if is_scarf(g, &f) {
                triangles.push(f.to_vec());
            }
        }
    }
    [vertices, edges, triangles]
}

/// Resolution supported on the Scarf complex. Only valid for generic ideals.
pub fn scarf_resolution<F: Field>(ideal: &MonomialIdeal) -> Result<Resolution<F>> {
    ideal.require_artinian()?;
    if !ideal.is_generic() {
        return Err(Error::NonGeneric);
    }
    let g = ideal.generators();
    let [vertices, edges, triangles] = scarf_faces(ideal);
    if vertices.len() != g.len() {
        return Err(Error::Internal("a generator is missing from the Scarf complex".into()));
    }

    let degrees = |faces: &[Vec<usize>]| faces.iter().map(|f| face_lcm(g, f)).collect::<Vec<_>>();
    let boundary = |rows: &[Vec<usize>], cols: &[Vec<usize>]| -> Result<MultigradedMatrix<F>> {
        let index: HashMap<&[usize], usize> = rows.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect();
        let mut mat = MultigradedMatrix::new(degrees(rows), degrees(cols));
        for (c, face) in cols.iter().enumerate() {
            for pos in 0..face.len() {
                let facet: Vec<usize> =
                    face.iter().enumerate().filter(|&(i, _)| i != pos).map(|(_, &x)| x).collect();
                let r = *index
                    .get(facet.as_slice())
                    .ok_or_else(|| Error::Internal(format!("Scarf face {face:?} has a non-Scarf facet")))?;
                mat.set(r, c, boundary_sign::<F>(pos));
            }
        }
        Ok(mat)
    };

    let empty = vec![Vec::new()];
    let f1 = boundary(&empty, &vertices)?;
    let f2 = boundary(&vertices, &edges)?;
    let f3 = boundary(&edges, &triangles)?;
    Ok(Resolution { f1, f2, f3, f2_faces: edges, f3_faces: triangles })
}
