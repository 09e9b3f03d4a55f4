//! Seeded property harness: each suite checks one identity over generated
//! diagrams and reports the first counterexample.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::alternating::{dealternators, is_nugatory, lift_to_torus, type_b_coloring};
use crate::diagram::{
    checkerboard_coloring, classify_crossings, faces, gauss_code, genus, CombinatorialMap, MapDocument,
};
use crate::error::{Error, Result};
use crate::generate::{generate, Kind, GENERATOR};
use crate::invariants::{
    crosscap_bound, defect_bound, gl_forms, greene_definiteness, howie_quantity, knot_signature,
    surface_cycle_rank, Definiteness, SurfacePairInvariants,
};
use crate::oracle::{determinant_oracle, signature_oracle};
use crate::Color;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// `b1(B) + b1(W) = c + 2g`, with Betti numbers from disk–band graphs.
    B1sum,
    /// `e(B)/2 - e(W)/2 = b - a`.
    EulerDiff,
    /// `sig(G_W) - sig(G_B) = b - a`.
    SignatureBridge,
    /// Knot signature equals the Seifert oracle.
    Signature,
    /// `|det G_W|` equals the Seifert oracle.
    Determinant,
    /// `det G != 0`, `sig G = b1 (mod 2)`, `Δ` even.
    Parity,
    /// Alternating maps, planar or lifted, are checkerboard colorable.
    Colorable,
    /// The torus lift is a genus-1 alternating colorable map with `Δ <= 2`.
    Lift,
    /// Alternating diagrams: `Δ = 0`, Howie's quantity 2, opposite definite forms.
    GreeneHowie,
    /// The crosscap bound stays under `ceil(c/2) + g` (or `floor` when allowed).
    Crosscap,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::B1sum,
        Suite::EulerDiff,
        Suite::SignatureBridge,
        Suite::Signature,
        Suite::Determinant,
        Suite::Parity,
        Suite::Colorable,
        Suite::Lift,
        Suite::GreeneHowie,
        Suite::Crosscap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::B1sum => "b1sum",
            Suite::EulerDiff => "euler-diff",
            Suite::SignatureBridge => "signature-bridge",
            Suite::Signature => "signature",
            Suite::Determinant => "determinant",
            Suite::Parity => "parity",
            Suite::Colorable => "colorable",
            Suite::Lift => "lift",
            Suite::GreeneHowie => "greene-howie",
            Suite::Crosscap => "crosscap",
        }
    }
}

impl std::fmt::Display for Suite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationSummary {
    pub suite: Suite,
    pub count: usize,
    pub passes: usize,
    pub failures: usize,
    pub seed: u64,
    pub generator: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<serde_json::Value>,
}

impl VerificationSummary {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// One generated case: crossing count, per-case seed and how it was drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub index: usize,
    pub crossings: usize,
    pub seed: u64,
    pub kind: Kind,
    pub lifted: bool,
}

/// Per-case parameters derived from the run seed.
pub fn cases(suite: Suite, count: usize, max_crossings: usize, seed: u64) -> Vec<Case> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|index| {
            let (kind, lifted) = source(suite, index);
            let low = if kind == Kind::AlmostAlternating { 3 } else { 1 };
            let crossings = rng.gen_range(low..=max_crossings.max(low));
            Case { index, crossings, seed: rng.gen(), kind, lifted }
        })
        .collect()
}

fn source(suite: Suite, index: usize) -> (Kind, bool) {
    const PLANAR: [Kind; 3] = [Kind::Random, Kind::Alternating, Kind::AlmostAlternating];
    match suite {
        Suite::Lift => (Kind::AlmostAlternating, true),
        Suite::GreeneHowie => (Kind::Alternating, false),
        Suite::Colorable if index % 2 == 1 => (Kind::AlmostAlternating, true),
        Suite::Colorable => (Kind::Alternating, false),
        Suite::B1sum | Suite::EulerDiff | Suite::Crosscap if index % 4 == 3 => {
            (Kind::AlmostAlternating, true)
        }
        _ => (PLANAR[index % 3], false),
    }
}

/// A generated almost alternating diagram, its non-nugatory dealternator and
/// its torus lift.
pub fn lifted_sample(n: usize, seed: u64) -> Result<(CombinatorialMap, usize, CombinatorialMap)> {
    let planar = generate(n, seed, Kind::AlmostAlternating)?;
    let report = dealternators(&planar)?;
    for c in report.dealternators {
        if !is_nugatory(&planar, c)? {
            let lift = lift_to_torus(&planar, c)?;
            return Ok((planar, c, lift));
        }
    }
    Err(Error::LiftFailed)
}

fn build(case: &Case) -> Result<CombinatorialMap> {
    if case.lifted {
        Ok(lifted_sample(case.crossings, case.seed)?.2)
    } else {
        generate(case.crossings, case.seed, case.kind)
    }
}

type Check = std::result::Result<(), String>;

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

fn check(suite: Suite, case: &Case, map: &CombinatorialMap) -> Result<Check> {
    let col = checkerboard_coloring(map).ok_or(Error::NotColorable)?;
    let c = map.crossing_count();
    let g = genus(map)?;
    Ok(match suite {
        Suite::B1sum => {
            let bb = surface_cycle_rank(map, &col, Color::Black);
            let bw = surface_cycle_rank(map, &col, Color::White);
            let fs = faces(map);
            let euler = fs.len() as i64 - c as i64;
            ensure(bb + bw == c + 2 * g && 2 - euler == 2 * g as i64, || {
                format!("b1(B) + b1(W) = {bb} + {bw}, c + 2g = {}", c + 2 * g)
            })
        }
        Suite::EulerDiff => {
            let s = SurfacePairInvariants::compute(map, &col)?;
            ensure(s.half_e_b - s.half_e_w == s.sigma_diff, || {
                format!("e(B)/2 - e(W)/2 = {}, b - a = {}", s.half_e_b - s.half_e_w, s.sigma_diff)
            })
        }
        Suite::SignatureBridge => {
            let (gb, gw) = gl_forms(map, &col)?;
            let k = classify_crossings(map, &col, false)?.counts;
            let diff = gw.signature() - gb.signature();
            let ba = k.b as i64 - k.a as i64;
            ensure(diff == ba, || format!("sig(G_W) - sig(G_B) = {diff}, b - a = {ba}"))
        }
        Suite::Signature => {
            let ours = knot_signature(map, &col)?;
            let oracle = signature_oracle(map)?;
            ensure(ours == oracle, || format!("signature {ours}, oracle {oracle}"))
        }
        Suite::Determinant => {
            let det = gl_forms(map, &col)?.1.determinant();
            let oracle = determinant_oracle(map)?;
            ensure(*det.magnitude() == oracle.into(), || format!("|det G_W| = {}, oracle {oracle}", det.magnitude()))
        }
        Suite::Parity => {
            let (gb, gw) = gl_forms(map, &col)?;
            let delta = defect_bound(map, &col)?;
            let forms_ok = [&gb, &gw].iter().all(|f| {
                let i = f.inertia();
                i.zero == 0 && (f.signature() - f.size() as i64).rem_euclid(2) == 0
            });
            ensure(forms_ok && delta % 2 == 0, || format!("degenerate or odd form, or odd Δ = {delta}"))
        }
        Suite::Colorable => Ok(()),
        Suite::Lift => {
            let (planar, x, lift) = lifted_sample(case.crossings, case.seed)?;
            let target = gauss_code(&planar)?.flipped(x + 1);
            let code = gauss_code(&lift)?;
            let tb = type_b_coloring(&lift)?;
            let k = classify_crossings(&lift, &tb, false)?.counts;
            let delta = defect_bound(&lift, &tb)?;
            let full = k.b.abs_diff(k.a) == lift.crossing_count();
            ensure(
                genus(&lift)? == 1
                    && code.is_alternating()
                    && code.cyclic_eq(&target)
                    && delta <= 2
                    && (!full || delta == 2),
                || format!("lift at {}: genus {}, code {code}, Δ = {delta}", x + 1, genus(&lift).unwrap_or(0)),
            )
        }
        Suite::GreeneHowie => {
            let delta = defect_bound(map, &col)?;
            let howie = howie_quantity(map, &col)?;
            let def = greene_definiteness(map, &col)?;
            ensure(delta == 0 && howie == 2 && def == Definiteness::BothDefiniteOpposite, || {
                format!("Δ = {delta}, howie = {howie}, {def:?}")
            })
        }
        Suite::Crosscap => {
            let bound = crosscap_bound(map, &col)?;
            let cap = if (c + 2 * g) % 4 == 1 { c.div_ceil(2) + g } else { c / 2 + g };
            ensure(bound <= cap, || format!("crosscap bound {bound} exceeds {cap}"))
        }
    })
}

fn run_case(suite: Suite, case: &Case) -> (Check, Option<CombinatorialMap>) {
    let map = match build(case) {
        Ok(m) => m,
        Err(e) => return (Err(format!("generation: {e}")), None),
    };
    let outcome = std::panic::catch_unwind(|| check(suite, case, &map))
        .unwrap_or_else(|_| Ok(Err("panicked".into())));
    match outcome {
        Ok(r) => (r, Some(map)),
        Err(e) => (Err(e.to_string()), Some(map)),
    }
}

/// Runs `suite` over `count` diagrams with at most `max_crossings` crossings.
/// Cases run in parallel; the summary does not depend on scheduling.
pub fn verify(suite: Suite, count: usize, max_crossings: usize, seed: u64) -> VerificationSummary {
    let cases = cases(suite, count, max_crossings, seed);
    let results: Vec<_> = cases.par_iter().map(|case| run_case(suite, case)).collect();
    let failures = results.iter().filter(|(r, _)| r.is_err()).count();
    let counterexample = cases.iter().zip(&results).find_map(|(case, (r, map))| {
        let detail = r.as_ref().err()?;
        Some(serde_json::json!({
            "case": case,
            "detail": detail,
            "map": map.as_ref().map(MapDocument::from),
        }))
    });
    VerificationSummary {
        suite,
        count,
        passes: count - failures,
        failures,
        seed,
        generator: GENERATOR.into(),
        counterexample,
    }
}
