//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Every comparison is exact; there are no floating point tolerances.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use complicial::budget::Budget;
use complicial::category::FiniteCategory;
use complicial::cli;
use complicial::fixtures;
use complicial::io::ReportDoc;
use complicial::lifting::{self, Engine, RelationVariant};
use complicial::nerve::{self, Nerve, Stratification};
use complicial::omega::OmegaCat;
use complicial::orientals::{self, Face, FaceSet};
use complicial::shapes;
use complicial::simplicial::{
    core, join, mono_decomposition, product, recompose, trivialize, Inclusion, SimplexId,
    SimplexRef, StratifiedComplex,
};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn budget() -> Budget {
    Budget::new(complicial::budget::DEFAULT_BUDGET)
}

fn nerve_of(c: &OmegaCat, bound: usize, s: Stratification) -> Result<Nerve, String> {
    nerve::nerve(c, bound, &s, &mut budget()).map_err(|e| e.to_string())
}

fn cat(name: &str) -> OmegaCat {
    fixtures::omega(name).expect("fixture")
}

fn marked_labels(x: &StratifiedComplex) -> BTreeSet<String> {
    x.marked_ids().map(|id| x.label(id).to_string()).collect()
}

fn admissibility_tables() -> Outcome {
    let cases: [(usize, usize, &str, &[&str]); 4] = [
        (2, 1, include_str!("golden/admissible_n2_k1.json"), &["012"]),
        (2, 0, include_str!("golden/admissible_n2_k0.json"), &["01", "012"]),
        (3, 2, include_str!("golden/admissible_n3_k2.json"), &["123", "0123"]),
        (3, 0, include_str!("golden/admissible_n3_k0.json"), &["01", "012", "013", "0123"]),
    ];
    for (n, k, golden, marked) in cases {
        let args = ["complicial", "gen", "admissible", "--n", &n.to_string(), "--k", &k.to_string()];
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = cli::run(args, &mut out, &mut err);
        ensure(code == cli::EXIT_OK, || format!("gen exited {code}"))?;
        let text = String::from_utf8(out).map_err(|e| e.to_string())?;
        ensure(text == golden, || format!("Δ^{k}[{n}] differs from its golden file"))?;
        let x = shapes::admissible(n, k).map_err(|e| e.to_string())?;
        let want: BTreeSet<String> = marked.iter().map(|s| s.to_string()).collect();
        ensure(marked_labels(&x) == want, || {
            format!("Δ^{k}[{n}] marks {:?}", marked_labels(&x))
        })?;
    }
    Ok("4 golden files equal".into())
}

fn faces_of(list: &[&str]) -> FaceSet {
    list.iter().map(|s| s.parse::<Face>().expect("face")).collect()
}

fn oriental_atom() -> Outcome {
    let a = orientals::atom(Face::full(4));
    let m = faces_of(&["01234", "0124", "0234", "012", "023", "034", "04", "0"]);
    let p = faces_of(&[
        "01234", "0123", "0134", "1234", "124", "234", "014", "01", "12", "23", "34", "4",
    ]);
    ensure(a.m == m, || format!("M = {:?}", a.m))?;
    ensure(a.p == p, || format!("P = {:?}", a.p))?;
    Ok(format!("|M| = {}, |P| = {}", m.len(), p.len()))
}

fn oriental_counts() -> Outcome {
    let o2 = orientals::build_oriental(2).map_err(|e| e.to_string())?;
    ensure(o2.counts() == [3, 4, 1], || format!("O_2 counts {:?}", o2.counts()))?;
    let o3 = orientals::build_oriental(3).map_err(|e| e.to_string())?;
    ensure(o3.counts()[1] == 11, || format!("O_3 has {} 1-cells", o3.counts()[1]))?;
    let mut o4_counts = Vec::new();
    for n in 0..=4 {
        let o = orientals::build_oriental(n).map_err(|e| e.to_string())?;
        ensure(o.counts()[n] == 1, || format!("O_{n} has {} top cells", o.counts()[n]))?;
        let built: BTreeSet<_> = o.cells().iter().cloned().collect();
        let searched = orientals::enumerate_cells_search(n, 4, &mut budget()).map_err(|e| e.to_string())?;
        ensure(built == searched, || format!("search and closure disagree at n = {n}"))?;
        o4_counts = o.counts();
    }
    Ok(format!("O_4 counts {o4_counts:?}, search agrees for n <= 4"))
}

/// Vertices and spine edges of a nerve simplex, identities written as objects.
fn spine(n: &Nerve, s: &SimplexRef) -> (Vec<usize>, Vec<usize>) {
    let t = n.simplex(s.target());
    let sur = s.surjection();
    let vertices = sur.iter().map(|&v| t.value(Face::vertex(v as usize))).collect();
    let edges = sur
        .windows(2)
        .map(|w| {
            if w[0] == w[1] {
                t.value(Face::vertex(w[0] as usize))
            } else {
                t.value(Face::from_vertices(&[w[0] as usize, w[1] as usize]).expect("edge"))
            }
        })
        .collect();
    (vertices, edges)
}

fn classical_face(c: &OmegaCat, (v, e): &(Vec<usize>, Vec<usize>), i: usize) -> (Vec<usize>, Vec<usize>) {
    let d = e.len();
    let mut v2 = v.clone();
    v2.remove(i);
    let mut e2 = e.clone();
    if i == 0 {
        e2.remove(0);
    } else if i == d {
        e2.pop();
    } else {
        let g = e2.remove(i);
        e2[i - 1] = c.compose(0, g, e[i - 1]).expect("composable");
    }
    (v2, e2)
}

/// Chains of nonidentity arrows of length `d`.
fn classical_chains(c: &OmegaCat, d: usize) -> BTreeSet<Vec<usize>> {
    let arrows = c.cells_of_dimension(1);
    let mut chains: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..d {
        chains = chains
            .into_iter()
            .flat_map(|ch| {
                let last = ch.last().copied();
                arrows
                    .iter()
                    .filter(|&&f| last.is_none_or(|l| c.target(0, l) == c.source(0, f)))
                    .map(|&f| {
                        let mut next = ch.clone();
                        next.push(f);
                        next
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    chains.into_iter().collect()
}

fn classical_nerve() -> Outcome {
    let mut summary = Vec::new();
    for name in ["poset2", "walking-iso"] {
        let c = cat(name);
        let n = nerve_of(&c, 4, Stratification::Identity)?;
        let x = n.complex();
        for d in 0..=4 {
            let street: BTreeSet<Vec<usize>> = if d == 0 {
                x.ids(0).map(|id| vec![n.simplex(id).value(Face::vertex(0))]).collect()
            } else {
                x.ids(d).map(|id| spine(&n, &SimplexRef::nondegenerate(id)).1).collect()
            };
            let classical = if d == 0 {
                c.cells_of_dimension(0).into_iter().map(|o| vec![o]).collect()
            } else {
                classical_chains(&c, d)
            };
            ensure(street == classical, || format!("{name}: dimension {d} differs"))?;
            for id in x.ids(d) {
                let s = spine(&n, &SimplexRef::nondegenerate(id));
                for (i, f) in x.faces(id).iter().enumerate() {
                    ensure(spine(&n, f) == classical_face(&c, &s, i), || {
                        format!("{name}: face {i} of {}", x.label(id))
                    })?;
                }
            }
        }
        summary.push(format!("{name} {:?}", x.counts()));
    }
    Ok(summary.join(", "))
}

fn street_roberts() -> Outcome {
    let mut checked = Vec::new();
    for name in ["poset2", "walking-iso", "two-cell"] {
        let c = cat(name);
        let x = Arc::new(nerve_of(&c, 4, Stratification::Identity)?.into_complex());
        let r = lifting::is_strict_complicial(&x, 4, &mut budget()).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{name} is not strict complicial"))?;
        checked.push(format!("{name} ({} problems)", r.problems_checked));
    }
    let mut x = nerve_of(&cat("poset2"), 4, Stratification::Identity)?.into_complex();
    let thin = x.marked_ids().find(|id| id.dim == 2).ok_or("no thin triangle")?;
    x.set_marked(thin, false);
    let x = Arc::new(x);
    let r = lifting::is_strict_complicial(&x, 4, &mut budget()).map_err(|e| e.to_string())?;
    ensure(!r.passed(), || "mutated nerve still passes".into())?;
    let w = r.witness.as_ref().ok_or("no witness")?;
    ensure(w.replay(&mut budget()).map_err(|e| e.to_string())?, || "witness does not replay".into())?;
    let back = ReportDoc::from_report(&r).to_report().map_err(|e| e.to_string())?;
    let w2 = back.witness.ok_or("witness lost in exchange")?;
    ensure(w2.replay(&mut budget()).map_err(|e| e.to_string())?, || "exchanged witness does not replay".into())?;
    Ok(format!("{}; mutation caught by {}", checked.join(", "), w.generator))
}

fn coskeletality() -> Outcome {
    for (name, n) in [("poset2", 1), ("walking-iso", 1), ("two-cell", 2)] {
        let r = nerve::coskeletality_check(&cat(name), n, 4, &mut budget()).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{name}: sphere fillers not unique"))?;
    }
    Ok("r = 3, 4 for 1-categories; r = 4 for two-cell".into())
}

fn marked_edges_are_equivalences() -> Outcome {
    let mut complicial_sets = 0;
    for name in fixtures::NAMES {
        let c = cat(name);
        for s in [Stratification::Identity, Stratification::Saturated1, Stratification::Saturated2] {
            let Ok(n) = nerve::nerve(&c, nerve::default_bound(&c), &s, &mut budget()) else {
                continue;
            };
            let x = Arc::new(n.into_complex());
            let r = lifting::is_complicial(&x, x.bound(), &mut budget()).map_err(|e| e.to_string())?;
            if !r.passed() {
                continue;
            }
            complicial_sets += 1;
            let eq: BTreeSet<SimplexId> = lifting::detect_1_equivalences(&x).into_iter().collect();
            for id in x.marked_ids().filter(|id| id.dim == 1) {
                ensure(eq.contains(&id), || {
                    format!("{name} ({}): marked {} is not a 1-equivalence", s.name(), x.label(id))
                })?;
            }
        }
    }
    ensure(complicial_sets >= 10, || format!("only {complicial_sets} complicial nerves"))?;
    Ok(format!("{complicial_sets} complicial nerves"))
}

fn saturation_dichotomy() -> Outcome {
    let c = cat("walking-iso");
    let ident = Arc::new(nerve_of(&c, 3, Stratification::Identity)?.into_complex());
    let r = lifting::is_saturated(&ident, 3, &mut budget()).map_err(|e| e.to_string())?;
    ensure(!r.passed(), || "identity stratification is saturated".into())?;
    let natural = Arc::new(nerve_of(&c, 3, Stratification::Saturated1)?.into_complex());
    let r = lifting::is_saturated(&natural, 3, &mut budget()).map_err(|e| e.to_string())?;
    ensure(r.passed(), || "isomorphism marking is not saturated".into())?;
    let edges: Vec<SimplexId> = ident.ids(1).collect();
    let mut found = Vec::new();
    for subset in 0u32..(1 << edges.len()) {
        let chosen: BTreeSet<SimplexId> =
            edges.iter().enumerate().filter(|(i, _)| subset >> i & 1 == 1).map(|(_, &e)| e).collect();
        let x = Arc::new(
            ident
                .as_ref()
                .clone()
                .with_marking(|id, _| id.dim >= 2 || chosen.contains(&id)),
        );
        let ok = lifting::is_complicial(&x, 3, &mut budget()).map_err(|e| e.to_string())?.passed()
            && lifting::is_saturated(&x, 3, &mut budget()).map_err(|e| e.to_string())?.passed();
        if ok {
            found.push(marked_labels(&x));
        }
    }
    ensure(found == vec![marked_labels(&natural)], || format!("saturated markings {found:?}"))?;
    Ok(format!("{} markings searched, one saturated", 1 << edges.len()))
}

fn weak_not_strict() -> Outcome {
    let x = Arc::new(nerve_of(&cat("invertible-two-cell"), 4, Stratification::Saturated2)?.into_complex());
    ensure(lifting::is_n_trivial(&x, 2), || "not 2-trivial".into())?;
    let weak = lifting::is_complicial(&x, 4, &mut budget()).map_err(|e| e.to_string())?;
    ensure(weak.passed(), || "not complicial".into())?;
    let strict = lifting::is_strict_complicial(&x, 4, &mut budget()).map_err(|e| e.to_string())?;
    ensure(!strict.passed(), || "strict complicial".into())?;
    let w = strict.witness.ok_or("no witness")?;
    Ok(format!("strictness fails at {} ({:?})", w.generator, w.failure))
}

fn homotopy_categories() -> Outcome {
    for name in ["poset2", "walking-iso", "cyclic3"] {
        let c = fixtures::category(name).map_err(|e| e.to_string())?;
        let x = Arc::new(nerve_of(&OmegaCat::from_category(&c).map_err(|e| e.to_string())?, 3, Stratification::Identity)?.into_complex());
        let mut quotients: Vec<(FiniteCategory, Vec<BTreeSet<SimplexRef>>)> = Vec::new();
        for v in RelationVariant::ALL {
            let h = lifting::homotopy_category_with(&x, v, 3, &mut budget()).map_err(|e| e.to_string())?;
            ensure(h.category.is_isomorphic(&c), || format!("{name}: Ho differs under {v:?}"))?;
            let classes = h.classes.iter().map(|cl| cl.iter().cloned().collect()).collect();
            quotients.push((h.category, classes));
        }
        ensure(quotients.windows(2).all(|w| w[0].1 == w[1].1), || {
            format!("{name}: relation variants disagree")
        })?;
    }
    Ok("poset2, walking-iso, cyclic3 under 4 variants".into())
}

fn kan_group() -> Outcome {
    let c = cat("cyclic3");
    let x = Arc::new(nerve_of(&c, 3, Stratification::Identity)?.into_complex().sharp());
    let r = lifting::is_complicial(&x, 3, &mut budget()).map_err(|e| e.to_string())?;
    ensure(r.passed(), || "sharp nerve is not complicial".into())?;
    let t = lifting::n_triviality(&x, 0).map_err(|e| e.to_string())?;
    ensure(t.passed(), || "not 0-trivial".into())?;
    Ok(format!("{} problems", r.problems_checked))
}

fn random_codomain(rng: &mut ChaCha8Rng) -> StratifiedComplex {
    let base = match rng.random_range(0..5) {
        0 => shapes::standard(3),
        1 => shapes::boundary(3),
        2 => shapes::horn(3, rng.random_range(0..=3)).expect("horn"),
        3 => product(&shapes::standard(1), &shapes::standard(2)),
        _ => join(&shapes::standard(1), &shapes::boundary(1)),
    };
    let marks: Vec<bool> = (0..base.total()).map(|_| rng.random_bool(0.3)).collect();
    let ids: Vec<SimplexId> = base.all_ids().collect();
    let position: BTreeMap<SimplexId, usize> = ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
    base.clone()
        .with_marking(|id, c| c.is_marked(id) || (id.dim > 0 && marks[position[&id]]))
}

fn mono_decomposition_roundtrip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut total_steps = 0;
    for trial in 0..10 {
        let v = Arc::new(random_codomain(&mut rng));
        let mut keep: BTreeSet<SimplexId> = BTreeSet::new();
        let mut keep_mark: BTreeSet<SimplexId> = BTreeSet::new();
        for id in v.all_ids() {
            let faces_kept = v.faces(id).iter().all(|f| keep.contains(&f.target()));
            if faces_kept && rng.random_bool(0.7) {
                keep.insert(id);
                if v.is_marked(id) && rng.random_bool(0.5) {
                    keep_mark.insert(id);
                }
            }
        }
        let inc = Inclusion::subcomplex(v.clone(), |id| keep.contains(&id), |id| keep_mark.contains(&id))
            .map_err(|e| e.to_string())?;
        let steps = mono_decomposition(&inc).map_err(|e| e.to_string())?;
        let rebuilt = recompose(&inc, &steps).map_err(|e| e.to_string())?;
        ensure(rebuilt.counts() == v.counts(), || format!("trial {trial}: counts differ"))?;
        ensure(marked_labels(&rebuilt) == marked_labels(&v), || format!("trial {trial}: markings differ"))?;
        for id in v.all_ids() {
            ensure(rebuilt.label(id) == v.label(id) && rebuilt.faces(id) == v.faces(id), || {
                format!("trial {trial}: {} differs", v.label(id))
            })?;
        }
        total_steps += steps.len();
    }
    Ok(format!("10 inclusions, {total_steps} steps"))
}

fn adjunction() -> Outcome {
    let sources = [
        shapes::standard(1),
        shapes::standard(2),
        shapes::thin_top(2),
        shapes::horn(2, 1).expect("horn"),
        shapes::admissible(2, 1).expect("admissible"),
        shapes::boundary(2),
    ];
    let targets = [
        nerve_of(&cat("walking-iso"), 3, Stratification::Saturated1)?.into_complex(),
        nerve_of(&cat("poset2"), 3, Stratification::Identity)?.into_complex(),
        shapes::admissible(3, 1).expect("admissible"),
        shapes::thin_top(3),
    ];
    let mut pairs = 0;
    let mut maps = 0;
    for a in &targets {
        ensure(a.total() <= 20, || format!("target too large: {}", a.total()))?;
        for n in 0..=2 {
            let core_a = Arc::new(core(a, n));
            let a = Arc::new(a.clone());
            for x in &sources {
                let tr = Arc::new(trivialize(x, n));
                let x = Arc::new(x.clone());
                let left: BTreeSet<_> = Engine::new(a.clone())
                    .maps(&tr, &mut budget())
                    .map_err(|e| e.to_string())?
                    .iter()
                    .map(|m| m.describe())
                    .collect();
                let right: BTreeSet<_> = Engine::new(core_a.clone())
                    .maps(&x, &mut budget())
                    .map_err(|e| e.to_string())?
                    .iter()
                    .map(|m| m.describe())
                    .collect();
                ensure(left == right, || format!("n = {n}: {} vs {} maps", left.len(), right.len()))?;
                pairs += 1;
                maps += left.len();
            }
        }
    }
    Ok(format!("{pairs} pairs, {maps} maps matched"))
}

fn main() {
    let criteria: [Criterion; 13] = [
        ("admissibility tables", admissibility_tables),
        ("atom of the 4-simplex", oriental_atom),
        ("oriental cell counts", oriental_counts),
        ("classical nerve agreement", classical_nerve),
        ("strict complicial nerves", street_roberts),
        ("coskeletality", coskeletality),
        ("marked edges are 1-equivalences", marked_edges_are_equivalences),
        ("saturation dichotomy", saturation_dichotomy),
        ("weak but not strict", weak_not_strict),
        ("homotopy categories", homotopy_categories),
        ("sharp group nerve", kan_group),
        ("monomorphism decomposition", mono_decomposition_roundtrip),
        ("truncation and core adjunction", adjunction),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let started = std::time::Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{secs:.2}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
