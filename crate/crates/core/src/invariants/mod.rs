//! Checkerboard-surface invariants: Betti numbers, euler numbers, Goeritz
//! forms, signatures, the defect bound and the crosscap bound.
//!
//! `B` and `W` are the black and white checkerboard surfaces. The Goeritz
//! matrix indexed by the faces of one color is the Gordon–Litherland form of
//! the surface spanned by the *other* color, so `G_B` is built from white
//! faces and `G_W` from black ones.

mod calibration;
mod report;

pub use calibration::{calibrate, calibration_set, CalibrationOutcome};
pub use report::{InvariantReport, OracleSummary};

use serde::{Deserialize, Serialize};

use crate::diagram::{
    classify_with, genus, writhe_with, CheckerboardColoring, Color, CombinatorialMap, Convention,
};
use crate::error::{Error, Result};
use crate::form::SymmetricIntegerForm;

/// `(b1(B), b1(W))` from face counts.
pub fn betti_checkerboard(map: &CombinatorialMap, coloring: &CheckerboardColoring) -> (usize, usize) {
    let c = map.crossing_count() + 1;
    (c - coloring.count(Color::Black), c - coloring.count(Color::White))
}

/// First Betti number of a checkerboard surface as the cycle rank of its
/// disk–band graph, without using the face-count formula.
pub fn surface_cycle_rank(map: &CombinatorialMap, coloring: &CheckerboardColoring, color: Color) -> usize {
    let disks = coloring.faces_of(color);
    let mut parent: Vec<usize> = (0..coloring.face_count()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut components = disks.len();
    let bands = band_ends(map, coloring, color);
    for &(f, g) in &bands {
        let (rf, rg) = (find(&mut parent, f), find(&mut parent, g));
        if rf != rg {
            parent[rf] = rg;
            components -= 1;
        }
    }
    bands.len() + components - disks.len()
}

/// For every crossing, the two faces of the given color meeting at it.
fn band_ends(map: &CombinatorialMap, coloring: &CheckerboardColoring, color: Color) -> Vec<(usize, usize)> {
    (0..map.crossing_count())
        .map(|c| {
            let mut ends = (4 * c..4 * c + 4)
                .filter(|&d| coloring.corner_color(map, d) == color)
                .map(|d| coloring.face_of(map.sigma(d)));
            let f = ends.next().expect("two corners of each color");
            let g = ends.next().expect("two corners of each color");
            (f, g)
        })
        .collect()
}

/// `(e(B), e(W))` from `e(B)/2 = w + b_I - a_I` and `e(W)/2 = w + a_II - b_II`.
pub fn euler_numbers(map: &CombinatorialMap, coloring: &CheckerboardColoring) -> Result<(i64, i64)> {
    euler_numbers_with(map, coloring, Convention::CALIBRATED)
}

pub fn euler_numbers_with(
    map: &CombinatorialMap,
    coloring: &CheckerboardColoring,
    conv: Convention,
) -> Result<(i64, i64)> {
    let w = writhe_with(map, conv)?;
    let k = classify_with(map, coloring, true, conv)?.counts;
    let half_b = w + k.b_i as i64 - k.a_i as i64;
    let half_w = w + k.a_ii as i64 - k.b_ii as i64;
    Ok((2 * half_b, 2 * half_w))
}

/// Goeritz matrix over the faces of `color`, dropping the face that contains
/// the lowest dart among them.
pub fn goeritz_matrix(
    map: &CombinatorialMap,
    coloring: &CheckerboardColoring,
    color: Color,
) -> Result<SymmetricIntegerForm> {
    goeritz_with(map, coloring, color, Convention::CALIBRATED)
}

pub fn goeritz_with(
    map: &CombinatorialMap,
    coloring: &CheckerboardColoring,
    color: Color,
    conv: Convention,
) -> Result<SymmetricIntegerForm> {
    let g = genus(map)?;
    if g != 0 {
        return Err(Error::NotPlanar(g));
    }
    let faces = coloring.faces_of(color);
    if faces.is_empty() {
        return Err(Error::NoFaces);
    }
    let mut index = vec![None; coloring.face_count()];
    for (i, &f) in faces.iter().enumerate().skip(1) {
        index[f] = Some(i - 1);
    }
    let classes = classify_with(map, coloring, false, conv)?.classes;
    let mut form = SymmetricIntegerForm::zeros(faces.len() - 1);
    for (c, (f, g)) in band_ends(map, coloring, color).into_iter().enumerate() {
        if f == g {
            continue;
        }
        let eta = conv.eta(classes[c].ab) * if color == Color::Black { -1 } else { 1 };
        if let Some(i) = index[f] {
            form.add_sym(i, i, eta);
        }
        if let Some(j) = index[g] {
            form.add_sym(j, j, eta);
        }
        if let (Some(i), Some(j)) = (index[f], index[g]) {
            form.add_sym(i, j, -eta);
        }
    }
    Ok(form)
}

/// `(G_B, G_W)`: the Gordon–Litherland forms of the black and white surfaces.
pub fn gl_forms(
    map: &CombinatorialMap,
    coloring: &CheckerboardColoring,
) -> Result<(SymmetricIntegerForm, SymmetricIntegerForm)> {
    gl_forms_with(map, coloring, Convention::CALIBRATED)
}

pub fn gl_forms_with(
    map: &CombinatorialMap,
    coloring: &CheckerboardColoring,
    conv: Convention,
) -> Result<(SymmetricIntegerForm, SymmetricIntegerForm)> {
    Ok((goeritz_with(map, coloring, Color::White, conv)?, goeritz_with(map, coloring, Color::Black, conv)?))
}

/// `(sig(G_W) + e(W)/2, sig(G_B) + e(B)/2)`.
pub fn signature_pair_with(
    map: &CombinatorialMap,
    coloring: &CheckerboardColoring,
    conv: Convention,
) -> Result<(i64, i64)> {
    let (gb, gw) = gl_forms_with(map, coloring, conv)?;
    let (eb, ew) = euler_numbers_with(map, coloring, conv)?;
    Ok((gw.signature() + ew / 2, gb.signature() + eb / 2))
}

/// Knot signature from both checkerboard surfaces; they must agree.
pub fn knot_signature(map: &CombinatorialMap, coloring: &CheckerboardColoring) -> Result<i64> {
    let (white, black) = signature_pair_with(map, coloring, Convention::CALIBRATED)?;
    if white != black {
        return Err(Error::SignatureMismatch { white, black });
    }
    Ok(white)
}

/// `Δ = c + b1(Σ) - |b - a|`.
pub fn defect_bound(map: &CombinatorialMap, coloring: &CheckerboardColoring) -> Result<usize> {
    let g = genus(map)?;
    let k = classify_with(map, coloring, false, Convention::CALIBRATED)?.counts;
    let total = map.crossing_count() + 2 * g;
    Ok(total - k.b.abs_diff(k.a))
}

/// `χ(B) + χ(W) + |e(B) - e(W)| / 2`.
pub fn howie_quantity(map: &CombinatorialMap, coloring: &CheckerboardColoring) -> Result<i64> {
    let c = map.crossing_count() as i64;
    let chi_b = coloring.count(Color::Black) as i64 - c;
    let chi_w = coloring.count(Color::White) as i64 - c;
    let (eb, ew) = euler_numbers(map, coloring)?;
    Ok(chi_b + chi_w + (eb - ew).abs() / 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Definiteness {
    BothDefiniteOpposite,
    Other,
}

pub fn definiteness_of(gb: &SymmetricIntegerForm, gw: &SymmetricIntegerForm) -> Definiteness {
    let (b, w) = (gb.inertia(), gw.inertia());
    let pos = |i: crate::form::Inertia, n: usize| i.positive == n;
    let neg = |i: crate::form::Inertia, n: usize| i.negative == n;
    let (nb, nw) = (gb.size(), gw.size());
    if (pos(b, nb) && neg(w, nw)) || (neg(b, nb) && pos(w, nw)) {
        Definiteness::BothDefiniteOpposite
    } else {
        Definiteness::Other
    }
}

/// Whether one checkerboard form is positive and the other negative definite.
pub fn greene_definiteness(map: &CombinatorialMap, coloring: &CheckerboardColoring) -> Result<Definiteness> {
    let (gb, gw) = gl_forms(map, coloring)?;
    Ok(definiteness_of(&gb, &gw))
}

/// Orientability of a checkerboard surface: every band is half-twisted, so
/// the surface is orientable iff its disk–band graph is bipartite.
pub fn surface_orientable(map: &CombinatorialMap, coloring: &CheckerboardColoring, color: Color) -> bool {
    let mut adj = vec![Vec::new(); coloring.face_count()];
    for (f, g) in band_ends(map, coloring, color) {
        if f == g {
            return false;
        }
        adj[f].push(g);
        adj[g].push(f);
    }
    let mut side: Vec<Option<bool>> = vec![None; coloring.face_count()];
    for start in coloring.faces_of(color) {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(true);
        let mut stack = vec![start];
        while let Some(f) = stack.pop() {
            let s = side[f].expect("visited");
            for &g in &adj[f] {
                match side[g] {
                    None => {
                        side[g] = Some(!s);
                        stack.push(g);
                    }
                    Some(t) if t == s => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// Upper bound on the crosscap number from the two checkerboard surfaces:
/// `b1(S)` if `S` is non-orientable, `b1(S) + 1` otherwise, minimized.
pub fn crosscap_bound(map: &CombinatorialMap, coloring: &CheckerboardColoring) -> Result<usize> {
    let g = genus(map)?;
    let (bb, bw) = betti_checkerboard(map, coloring);
    let cand = |b1: usize, color| if surface_orientable(map, coloring, color) { b1 + 1 } else { b1 };
    let bound = cand(bb, Color::Black).min(cand(bw, Color::White));
    let c = map.crossing_count();
    assert!(bound <= c.div_ceil(2) + g, "crosscap bound {bound} exceeds ceil(c/2) + g");
    if (c + 2 * g) % 4 != 1 {
        assert!(bound <= c / 2 + g, "crosscap bound {bound} exceeds floor(c/2) + g");
    }
    Ok(bound)
}

/// Quantities attached to the pair of checkerboard surfaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfacePairInvariants {
    pub b1_b: usize,
    pub b1_w: usize,
    pub e_b: i64,
    pub e_w: i64,
    pub half_e_b: i64,
    pub half_e_w: i64,
    pub sigma_diff: i64,
    pub defect_bound: usize,
    pub howie_quantity: i64,
    pub chi_f: i64,
}

impl SurfacePairInvariants {
    pub fn compute(map: &CombinatorialMap, coloring: &CheckerboardColoring) -> Result<Self> {
        let (b1_b, b1_w) = betti_checkerboard(map, coloring);
        let (e_b, e_w) = euler_numbers(map, coloring)?;
        let k = classify_with(map, coloring, false, Convention::CALIBRATED)?.counts;
        let sigma_diff = k.b as i64 - k.a as i64;
        let defect_bound = defect_bound(map, coloring)?;
        let howie_quantity = howie_quantity(map, coloring)?;
        let chi_f = 2 - b1_w as i64 - b1_b as i64 + sigma_diff.abs();
        Ok(SurfacePairInvariants {
            b1_b,
            b1_w,
            e_b,
            e_w,
            half_e_b: e_b / 2,
            half_e_w: e_w / 2,
            sigma_diff,
            defect_bound,
            howie_quantity,
            chi_f,
        })
    }
}

#[cfg(test)]
mod tests;
