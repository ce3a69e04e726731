//! Decomposition of a monomorphism into boundary attachments and markings.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::complex::{ComplexBuilder, SimplexId, SimplexRef, StratifiedComplex};
use super::map::Inclusion;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum Step {
    /// Pushout along the regular boundary inclusion `∂Δ[dim] ↪ Δ[dim]`.
    Attach { dim: usize, simplex: String },
    /// Pushout along the entire inclusion `Δ[dim] ↪ Δ[dim]_t`.
    Mark { dim: usize, simplex: String },
}

impl Step {
    pub fn simplex(&self) -> &str {
        match self {
            Step::Attach { simplex, .. } | Step::Mark { simplex, .. } => simplex,
        }
    }
}

/// Steps rebuilding the codomain of `inclusion` from its image, verified by recomposition.
pub fn mono_decomposition(inclusion: &Inclusion) -> Result<Vec<Step>> {
    let v = inclusion.codomain();
    let u = inclusion.domain();
    let mut steps = Vec::new();
    for id in v.all_ids() {
        if inclusion.preimage(id).is_none() {
            steps.push(Step::Attach {
                dim: id.dim,
                simplex: v.label(id).to_string(),
            });
        }
    }
    for id in v.marked_ids() {
        let marked_before = inclusion.preimage(id).is_some_and(|p| u.is_marked(p));
        if !marked_before {
            steps.push(Step::Mark {
                dim: id.dim,
                simplex: v.label(id).to_string(),
            });
        }
    }
    let rebuilt = recompose(inclusion, &steps)?;
    if !same_complex(&rebuilt, v) {
        return Err(Error::Precondition(
            "decomposition does not recompose to the codomain".to_string(),
        ));
    }
    Ok(steps)
}

/// Applies the steps to the image of `inclusion`, attaching each simplex
/// along faces that must already be present.
pub fn recompose(inclusion: &Inclusion, steps: &[Step]) -> Result<StratifiedComplex> {
    let v = inclusion.codomain();
    let u = inclusion.domain();
    let mut present: HashMap<SimplexId, bool> = HashMap::new();
    for id in u.all_ids() {
        present.insert(inclusion.map().image(id).target(), u.is_marked(id));
    }
    for step in steps {
        let id = v.id(step.simplex())?;
        match step {
            Step::Attach { dim, .. } => {
                if *dim != id.dim || present.contains_key(&id) {
                    return Err(Error::InvalidParameters(format!(
                        "cannot attach `{}`",
                        step.simplex()
                    )));
                }
                if let Some(f) = v.faces(id).iter().find(|f| !present.contains_key(&f.target())) {
                    return Err(Error::InvalidParameters(format!(
                        "boundary of `{}` is missing `{}`",
                        step.simplex(),
                        v.describe(f)
                    )));
                }
                present.insert(id, false);
            }
            Step::Mark { dim, .. } => match present.get_mut(&id) {
                Some(m) if *dim == id.dim && id.dim > 0 => *m = true,
                _ => {
                    return Err(Error::InvalidParameters(format!(
                        "cannot mark `{}`",
                        step.simplex()
                    )))
                }
            },
        }
    }
    // rebuild in the codomain's order so that the result is directly comparable
    let mut builder = ComplexBuilder::new(v.bound());
    let mut renumber: HashMap<SimplexId, SimplexId> = HashMap::new();
    for id in v.all_ids() {
        let Some(&marked) = present.get(&id) else { continue };
        let faces = v
            .faces(id)
            .iter()
            .map(|f| SimplexRef::from_parts(renumber[&f.target()], f.surjection().into()))
            .collect();
        let new = builder.add_with_dim(v.label(id), id.dim, faces, marked)?;
        renumber.insert(id, new);
    }
    Ok(builder.build_unchecked())
}

fn same_complex(a: &StratifiedComplex, b: &StratifiedComplex) -> bool {
    a.counts() == b.counts()
        && a.all_ids().all(|id| {
            let (ca, cb) = (a.cell(id), b.cell(id));
            ca.label == cb.label && ca.marked == cb.marked && ca.faces == cb.faces
        })
}
