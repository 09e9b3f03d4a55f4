//! End-to-end acceptance run: prints one PASS/FAIL line per criterion.

use knotsurf::diagram::{classify_crossings, gauss_code};
use knotsurf::invariants::{gl_forms, surface_cycle_rank};
use knotsurf::tables::rolfsen;
use knotsurf::verify::lifted_sample;
use knotsurf::*;

const RANDOM_PLANAR: usize = 600;
const LIFTS: usize = 120;
const MAX_CROSSINGS: usize = 12;

struct Sample {
    name: String,
    map: CombinatorialMap,
    alternating: bool,
}

struct Lifted {
    planar: CombinatorialMap,
    dealternator: usize,
    lift: CombinatorialMap,
}

fn tables() -> Vec<(Sample, CorpusExpect)> {
    rolfsen()
        .into_iter()
        .map(|r| {
            let map = parse_pd(&r.pd).unwrap();
            let expect = CorpusExpect { signature: r.signature.unwrap(), determinant: r.determinant.unwrap() };
            (Sample { name: r.name, map, alternating: true }, expect)
        })
        .collect()
}

struct CorpusExpect {
    signature: i64,
    determinant: u64,
}

fn random_planar() -> Vec<Sample> {
    let kinds = [Kind::Random, Kind::Alternating, Kind::AlmostAlternating];
    (0..RANDOM_PLANAR)
        .map(|i| {
            let kind = kinds[i % 3];
            let n = if kind == Kind::AlmostAlternating { 3 + i % (MAX_CROSSINGS - 2) } else { 1 + i % MAX_CROSSINGS };
            let map = generate(n, 1000 + i as u64, kind).unwrap();
            Sample { name: format!("{kind:?}/{n}/{i}"), map, alternating: kind == Kind::Alternating }
        })
        .collect()
}

fn lifts() -> Vec<Lifted> {
    (0..LIFTS)
        .map(|i| {
            let (planar, dealternator, lift) = lifted_sample(3 + i % 8, 5000 + i as u64).unwrap();
            Lifted { planar, dealternator, lift }
        })
        .collect()
}

fn coloring(m: &CombinatorialMap) -> CheckerboardColoring {
    checkerboard_coloring(m).expect("cellular alternating or planar maps are colorable")
}

/// Genus-1, two crossings, Gauss code o1o2u1u2: no checkerboard coloring.
fn non_colorable_witness() -> CombinatorialMap {
    CombinatorialMap::new(vec![4, 5, 7, 6, 0, 1, 3, 2], vec![false, true], None).unwrap()
}

fn report(results: &mut Vec<bool>, n: usize, ok: bool, what: &str) {
    println!("criterion {n}: {} - {what}", if ok { "PASS" } else { "FAIL" });
    results.push(ok);
}

#[test]
fn acceptance() {
    let tables = tables();
    let random = random_planar();
    let lifts = lifts();
    let planar: Vec<&Sample> = tables.iter().map(|(s, _)| s).chain(&random).collect();
    let all: Vec<&CombinatorialMap> =
        planar.iter().map(|s| &s.map).chain(lifts.iter().map(|l| &l.lift)).collect();
    let mut results = Vec::new();

    let c1 = tables.iter().all(|(s, _)| {
        let col = coloring(&s.map);
        defect_bound(&s.map, &col).unwrap() == 0
            && howie_quantity(&s.map, &col).unwrap() == 2
            && greene_definiteness(&s.map, &col).unwrap() == Definiteness::BothDefiniteOpposite
    });
    report(&mut results, 1, c1, "14 table diagrams: defect 0, Howie 2, opposite definite forms");

    let mut c2 = tables.iter().all(|(s, e)| {
        let sigma = knot_signature(&s.map, &coloring(&s.map)).unwrap();
        sigma == signature_oracle(&s.map).unwrap() && sigma == e.signature
    });
    c2 &= random.len() >= 500
        && random.iter().all(|s| {
            s.map.crossing_count() <= MAX_CROSSINGS
                && knot_signature(&s.map, &coloring(&s.map)).unwrap() == signature_oracle(&s.map).unwrap()
        });
    report(&mut results, 2, c2, &format!("signature equals oracle on 14 + {} diagrams", random.len()));

    let c3 = all.iter().all(|m| {
        let col = coloring(m);
        let g = genus(m).unwrap();
        let fs = faces(m);
        let (bb, bw) = betti_checkerboard(m, &col);
        bb + bw == m.crossing_count() + 2 * g
            && fs.len() + 2 * g == m.crossing_count() + 2
            && surface_cycle_rank(m, &col, Color::Black) == bb
            && surface_cycle_rank(m, &col, Color::White) == bw
    });
    report(&mut results, 3, c3, &format!("b1(B) + b1(W) = c + 2g on {} planar and torus maps", all.len()));

    let euler_half = all.iter().all(|m| {
        let s = SurfacePairInvariants::compute(m, &coloring(m)).unwrap();
        s.half_e_b - s.half_e_w == s.sigma_diff
    });
    let sig_half = planar.iter().all(|s| {
        let col = coloring(&s.map);
        let (gb, gw) = gl_forms(&s.map, &col).unwrap();
        let k = classify_crossings(&s.map, &col, false).unwrap().counts;
        gw.signature() - gb.signature() == k.b as i64 - k.a as i64
    });
    report(&mut results, 4, euler_half && sig_half, "e(B)/2 - e(W)/2 = b - a and sig(G_W) - sig(G_B) = b - a");

    let c5 = lifts.len() >= 100
        && lifts.iter().all(|l| {
            let code = gauss_code(&l.lift).unwrap();
            let target = gauss_code(&l.planar).unwrap().flipped(l.dealternator + 1);
            let Ok(tb) = type_b_coloring(&l.lift) else { return false };
            let k = classify_crossings(&l.lift, &tb, false).unwrap().counts;
            let delta = defect_bound(&l.lift, &tb).unwrap();
            genus(&l.lift).unwrap() == 1
                && code.is_alternating()
                && code.cyclic_eq(&target)
                && delta <= 2
                && (k.b.abs_diff(k.a) != l.lift.crossing_count() || delta == 2)
        });
    report(&mut results, 5, c5, &format!("{} torus lifts: genus 1, alternating, flipped code, defect <= 2", lifts.len()));

    let alternating_colorable = planar
        .iter()
        .filter(|s| s.alternating)
        .map(|s| &s.map)
        .chain(lifts.iter().map(|l| &l.lift))
        .all(|m| checkerboard_coloring(m).is_some());
    let w = non_colorable_witness();
    let witness = genus(&w).unwrap() == 1
        && w.component_count() == 1
        && !gauss_code(&w.oriented_from(0).unwrap()).unwrap().is_alternating()
        && InvariantReport::compute(&w, false) == Err(Error::NotColorable);
    report(&mut results, 6, alternating_colorable && witness, "alternating cellular maps colorable; genus-1 witness is not");

    let c7 = planar.iter().all(|s| {
        let col = coloring(&s.map);
        let (gb, gw) = gl_forms(&s.map, &col).unwrap();
        let forms = [gb, gw].iter().all(|f| {
            f.determinant() != 0.into() && (f.signature() - f.size() as i64).rem_euclid(2) == 0
        });
        forms && defect_bound(&s.map, &col).unwrap() % 2 == 0
    });
    report(&mut results, 7, c7, "det(G) != 0, sig(G) = b1 mod 2, defect even");

    let bound = |m: &CombinatorialMap| crosscap_bound(m, &coloring(m)).unwrap();
    let named = |name: &str| &tables.iter().find(|(s, _)| s.name == name).unwrap().0.map;
    let within = all.iter().all(|m| {
        let (c, g) = (m.crossing_count(), genus(m).unwrap());
        let cap = if (c + 2 * g) % 4 == 1 { c.div_ceil(2) + g } else { c / 2 + g };
        bound(m) <= cap
    });
    let c8 = bound(named("3_1")) == 1 && bound(named("4_1")) == 2 && within;
    report(&mut results, 8, c8, "crosscap bound: trefoil 1, figure-eight 2, within ceil/floor(c/2) + g");

    let c9 = planar.iter().all(|s| {
        let det = gl_forms(&s.map, &coloring(&s.map)).unwrap().1.determinant();
        *det.magnitude() == determinant_oracle(&s.map).unwrap().into()
    }) && tables.iter().all(|(s, e)| determinant_oracle(&s.map).unwrap() == e.determinant);
    report(&mut results, 9, c9, "|det G_W| equals the oracle determinant");

    assert!(results.iter().all(|&ok| ok), "acceptance failures: {results:?}");
}
