//! Property checks defined by lifting against families of generators.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::engine::{characteristic_map, Engine, LiftingProblem};
use crate::budget::Budget;
use crate::error::Result;
use crate::shapes::{self, Family, GeneratorSpec};
use crate::simplicial::{ComplexMap, StratifiedComplex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Complicial,
    StrictComplicial,
    Saturated,
    NTrivial { n: usize },
    Quasicategory,
    /// Unique fillers for spheres `∂Δ[r] → A`, `n + 1 < r ≤ bound`.
    Coskeletal { n: usize },
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::Complicial => write!(f, "complicial"),
            Property::StrictComplicial => write!(f, "strict-complicial"),
            Property::Saturated => write!(f, "saturated"),
            Property::NTrivial { n } => write!(f, "{n}-trivial"),
            Property::Quasicategory => write!(f, "quasi-category"),
            Property::Coskeletal { n } => write!(f, "{}-coskeletal", n + 1),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Failure {
    NoExtension,
    NotUnique,
}

/// A lifting problem that fails the way the report says it does.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub generator: GeneratorSpec,
    pub problem: LiftingProblem,
    pub failure: Failure,
    /// Two distinct extensions for [`Failure::NotUnique`], none otherwise.
    pub extensions: Vec<ComplexMap>,
}

impl Witness {
    /// Re-solves the problem and confirms the recorded failure.
    pub fn replay(&self, budget: &mut Budget) -> Result<bool> {
        let found = self.problem.extensions(2, budget)?;
        Ok(match self.failure {
            Failure::NoExtension => found.is_empty(),
            Failure::NotUnique => {
                found.len() == 2
                    && self.extensions.len() == 2
                    && self.extensions[0] != self.extensions[1]
                    && self.extensions.iter().all(|e| {
                        e.violations().is_empty()
                            && self
                                .problem
                                .inclusion()
                                .domain()
                                .all_ids()
                                .all(|id| {
                                    let img = self.problem.inclusion().map().image(id).target();
                                    e.image(img) == self.problem.attempt().image(id)
                                })
                    })
            }
        })
    }
}

/// Outcome of a check, certified up to `bound` only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub property: Property,
    pub bound: usize,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub problems_checked: u64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// At least one extension.
    Exists,
    /// Exactly one extension.
    Unique,
}

/// Solves every lifting problem built from `specs` against `a`, stopping at the first failure.
pub fn check_generators(
    a: &Arc<StratifiedComplex>,
    specs: &[GeneratorSpec],
    mode: Mode,
    property: Property,
    bound: usize,
    budget: &mut Budget,
) -> Result<CheckReport> {
    let mut engine = Engine::new(a.clone());
    let mut checked = 0u64;
    let limit = match mode {
        Mode::Exists => 1,
        Mode::Unique => 2,
    };
    for spec in specs {
        let inclusion = shapes::make_inclusion(spec)?;
        let maps = engine.maps(inclusion.domain(), budget)?;
        for attempt in maps {
            checked += 1;
            let found = engine.extensions(&inclusion, &attempt, limit, budget)?;
            let failure = match (mode, found.len()) {
                (_, 0) => Some(Failure::NoExtension),
                (Mode::Unique, n) if n > 1 => Some(Failure::NotUnique),
                _ => None,
            };
            if let Some(failure) = failure {
                let extensions = if failure == Failure::NotUnique { found } else { Vec::new() };
                return Ok(CheckReport {
                    property,
                    bound,
                    verdict: Verdict::Fail,
                    witness: Some(Witness {
                        generator: spec.clone(),
                        problem: LiftingProblem::new(inclusion, attempt)?,
                        failure,
                        extensions,
                    }),
                    problems_checked: checked,
                });
            }
        }
    }
    Ok(CheckReport {
        property,
        bound,
        verdict: Verdict::Pass,
        witness: None,
        problems_checked: checked,
    })
}

fn j_specs(bound: usize) -> Vec<GeneratorSpec> {
    shapes::family_specs(Family::J, bound)
}

/// Extensions exist along every admissible horn and thinness extension up to `bound`.
pub fn is_complicial(a: &Arc<StratifiedComplex>, bound: usize, budget: &mut Budget) -> Result<CheckReport> {
    check_generators(a, &j_specs(bound), Mode::Exists, Property::Complicial, bound, budget)
}

/// As [`is_complicial`], with unique extensions.
pub fn is_strict_complicial(
    a: &Arc<StratifiedComplex>,
    bound: usize,
    budget: &mut Budget,
) -> Result<CheckReport> {
    check_generators(a, &j_specs(bound), Mode::Unique, Property::StrictComplicial, bound, budget)
}

/// The one-sided saturation inclusions `Δ[3]_eq ⋆ Δ[n] ↪ Δ[3]♯ ⋆ Δ[n]`, `-1 ≤ n ≤ bound - 4`.
pub fn saturation_specs(bound: usize) -> Vec<GeneratorSpec> {
    (-1..=bound as isize - 4)
        .map(|n| GeneratorSpec::Saturation { m: -1, n })
        .collect()
}

/// Extensions exist along the one-sided saturation inclusions up to `bound`.
pub fn is_saturated(a: &Arc<StratifiedComplex>, bound: usize, budget: &mut Budget) -> Result<CheckReport> {
    check_generators(a, &saturation_specs(bound), Mode::Exists, Property::Saturated, bound, budget)
}

/// Direct scan; a failure comes with the problem `Δ[r] ↪ Δ[r]_t` on an unmarked simplex.
pub fn n_triviality(a: &Arc<StratifiedComplex>, n: usize) -> Result<CheckReport> {
    let bad = a.all_ids().find(|&id| id.dim > n && !a.is_marked(id));
    let checked = a.all_ids().filter(|id| id.dim > n).count() as u64;
    let property = Property::NTrivial { n };
    let Some(id) = bad else {
        return Ok(CheckReport {
            property,
            bound: a.bound(),
            verdict: Verdict::Pass,
            witness: None,
            problems_checked: checked,
        });
    };
    let spec = GeneratorSpec::ThinTop { n: id.dim };
    let inclusion = shapes::make_inclusion(&spec)?;
    let attempt = characteristic_map(a, &crate::simplicial::SimplexRef::nondegenerate(id))?;
    let attempt = attempt.retarget(inclusion.domain().clone(), a.clone())?;
    Ok(CheckReport {
        property,
        bound: a.bound(),
        verdict: Verdict::Fail,
        witness: Some(Witness {
            generator: spec,
            problem: LiftingProblem::new(inclusion, attempt)?,
            failure: Failure::NoExtension,
            extensions: Vec::new(),
        }),
        problems_checked: checked,
    })
}

pub fn is_n_trivial(a: &StratifiedComplex, n: usize) -> bool {
    crate::simplicial::is_n_trivial(a, n)
}

/// Fillers for all inner horns `Λ^k[n] ↪ Δ[n]`, `0 < k < n ≤ bound`; markings are ignored.
pub fn is_quasicategory(x: &Arc<StratifiedComplex>, bound: usize, budget: &mut Budget) -> Result<CheckReport> {
    let flat = Arc::new(x.flat());
    let specs: Vec<GeneratorSpec> = (2..=bound)
        .flat_map(|n| (1..n).map(move |k| GeneratorSpec::Horn { n, k }))
        .collect();
    check_generators(&flat, &specs, Mode::Exists, Property::Quasicategory, bound, budget)
}

/// Every sphere `∂Δ[r] → a` with `n + 1 < r ≤ bound` has exactly one filler.
pub fn sphere_fillers(a: &Arc<StratifiedComplex>, n: usize, bound: usize, budget: &mut Budget) -> Result<CheckReport> {
    let specs: Vec<GeneratorSpec> = (n + 2..=bound).map(|r| GeneratorSpec::Boundary { n: r }).collect();
    check_generators(a, &specs, Mode::Unique, Property::Coskeletal { n }, bound, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::trivialize;

    fn marked_interval() -> Arc<StratifiedComplex> {
        Arc::new(shapes::standard(1).sharp())
    }

    #[test]
    fn marked_edge_without_inverse_fails() {
        let a = marked_interval();
        let report = is_complicial(&a, 2, &mut Budget::unlimited()).unwrap();
        assert_eq!(report.verdict, Verdict::Fail);
        let w = report.witness.unwrap();
        // the first failing problem is an outer 2-horn asking for an inverse of 01
        assert!(matches!(w.generator, GeneratorSpec::AdmissibleHorn { n: 2, k: 0 | 2 }));
        assert_eq!(w.failure, Failure::NoExtension);
        assert!(w.replay(&mut Budget::unlimited()).unwrap());
    }

    #[test]
    fn monotone_in_bound() {
        let a = marked_interval();
        assert!(is_complicial(&a, 1, &mut Budget::unlimited()).unwrap().passed());
        let flat = Arc::new(shapes::standard(1).with_bound(3).unwrap());
        for b in 1..=3 {
            assert!(is_complicial(&flat, b, &mut Budget::unlimited()).unwrap().passed());
        }
    }

    #[test]
    fn hollow_horn_is_not_a_quasicategory() {
        let d2 = Arc::new(shapes::standard(2));
        assert!(is_quasicategory(&d2, 2, &mut Budget::unlimited()).unwrap().passed());
        let horn = Arc::new(shapes::horn(2, 1).unwrap());
        let r = is_quasicategory(&horn, 2, &mut Budget::unlimited()).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(r.witness.unwrap().replay(&mut Budget::unlimited()).unwrap());
    }

    #[test]
    fn n_triviality_witness_replays() {
        let x = Arc::new(shapes::admissible(3, 1).unwrap());
        let r = n_triviality(&x, 1).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(r.witness.unwrap().replay(&mut Budget::unlimited()).unwrap());
        let t = Arc::new(trivialize(&x, 1));
        assert!(n_triviality(&t, 1).unwrap().passed());
        assert!(is_n_trivial(&shapes::delta3_eq(), 1));
    }

    #[test]
    fn poset_nerves_fill_spheres_uniquely() {
        // Δ[3] is the nerve of the poset [3]
        let d3 = Arc::new(shapes::standard(3).with_bound(4).unwrap());
        assert!(sphere_fillers(&d3, 0, 4, &mut Budget::unlimited()).unwrap().passed());
        let hollow = Arc::new(shapes::boundary(2).with_bound(3).unwrap());
        let r = sphere_fillers(&hollow, 0, 3, &mut Budget::unlimited()).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        let w = r.witness.unwrap();
        assert_eq!(w.generator, GeneratorSpec::Boundary { n: 2 });
        assert!(w.replay(&mut Budget::unlimited()).unwrap());
    }
}
