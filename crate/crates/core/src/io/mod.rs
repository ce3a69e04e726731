//! The JSON exchange format.
//!
//! Every document is `{"format": 1, "payload": {<kind>: ...}}`. Printing is
//! canonical: simplices in order of dimension then position, every marking
//! spelled out, and object keys in a fixed order, so identical values print
//! to identical bytes.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::category::{FiniteCategory, Morphism};
use crate::error::{Error, Result};
use crate::lifting::{CheckReport, Failure, LiftingProblem, Property, Verdict, Witness};
use crate::omega::{Level, OmegaCat};
use crate::orientals::Cell;
use crate::shapes::{self, GeneratorSpec};
use crate::simplicial::{ComplexBuilder, ComplexMap, Inclusion, SimplexRef, Step, StratifiedComplex};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub format: u32,
    pub payload: Payload,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Payload {
    Complex(ComplexDoc),
    Map(MapDoc),
    Inclusion(MapDoc),
    OmegaCat(OmegaDoc),
    Cells(CellsDoc),
    Category(CategoryDoc),
    Report(ReportDoc),
    Steps(Vec<Step>),
    Simplices(SimplicesDoc),
}

impl Document {
    pub fn new(payload: Payload) -> Self {
        Document {
            format: FORMAT_VERSION,
            payload,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.payload {
            Payload::Complex(_) => "complex",
            Payload::Map(_) => "map",
            Payload::Inclusion(_) => "inclusion",
            Payload::OmegaCat(_) => "omega_cat",
            Payload::Cells(_) => "cells",
            Payload::Category(_) => "category",
            Payload::Report(_) => "report",
            Payload::Steps(_) => "steps",
            Payload::Simplices(_) => "simplices",
        }
    }
}

/// Parses a document, reporting the line and column of the first problem.
pub fn parse(text: &str) -> Result<Document> {
    let doc: Document = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if doc.format != FORMAT_VERSION {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: format!("unsupported format version {}", doc.format),
        });
    }
    Ok(doc)
}

/// Canonical text of a document, ending in a newline.
pub fn print(doc: &Document) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

/// A simplex written by label, or as a degeneracy word applied to a label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RefDoc {
    Simplex(String),
    Degenerate {
        of: String,
        /// Strictly decreasing: `[2, 0]` is `s₂ s₀`.
        deg: Vec<usize>,
    },
}

impl RefDoc {
    pub fn from_ref(x: &StratifiedComplex, s: &SimplexRef) -> Self {
        let of = x.label(s.target()).to_string();
        if s.is_degenerate() {
            RefDoc::Degenerate {
                of,
                deg: s.degeneracy_word(),
            }
        } else {
            RefDoc::Simplex(of)
        }
    }

    pub fn resolve(&self, x: &StratifiedComplex) -> Result<SimplexRef> {
        match self {
            RefDoc::Simplex(l) => x.simplex(l),
            RefDoc::Degenerate { of, deg } => SimplexRef::from_word(x.id(of)?, deg),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimplexDoc {
    pub label: String,
    pub dim: usize,
    pub faces: Vec<RefDoc>,
    pub marked: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub origin: Option<String>,
    pub bound: usize,
    pub simplices: Vec<SimplexDoc>,
}

impl ComplexDoc {
    pub fn from_complex(x: &StratifiedComplex) -> Self {
        let simplices = x
            .all_ids()
            .map(|id| SimplexDoc {
                label: x.label(id).to_string(),
                dim: id.dim,
                faces: x.faces(id).iter().map(|f| RefDoc::from_ref(x, f)).collect(),
                marked: x.is_marked(id),
            })
            .collect();
        ComplexDoc {
            origin: None,
            bound: x.bound(),
            simplices,
        }
    }

    pub fn with_origin(mut self, origin: impl Into<String>) -> Self {
        self.origin = Some(origin.into());
        self
    }

    /// Rebuilds and validates the complex; faces must be listed before use.
    pub fn to_complex(&self) -> Result<StratifiedComplex> {
        let mut builder = ComplexBuilder::new(self.bound);
        for s in &self.simplices {
            if s.dim > 0 && s.faces.len() != s.dim + 1 {
                return Err(Error::InvalidParameters(format!(
                    "`{}` lists {} faces for dimension {}",
                    s.label,
                    s.faces.len(),
                    s.dim
                )));
            }
            let faces = s
                .faces
                .iter()
                .map(|f| f.resolve(builder.current()))
                .collect::<Result<Vec<_>>>()?;
            builder.add_with_dim(s.label.clone(), s.dim, faces, s.marked)?;
        }
        builder.build()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ImageDoc {
    pub from: String,
    pub to: RefDoc,
}

fn images_of(map: &ComplexMap) -> Vec<ImageDoc> {
    map.domain()
        .all_ids()
        .map(|id| ImageDoc {
            from: map.domain().label(id).to_string(),
            to: RefDoc::from_ref(map.codomain(), map.image(id)),
        })
        .collect()
}

fn map_from_images(
    domain: Arc<StratifiedComplex>,
    codomain: Arc<StratifiedComplex>,
    images: &[ImageDoc],
) -> Result<ComplexMap> {
    let mut slots: Vec<Vec<Option<SimplexRef>>> =
        (0..=domain.bound()).map(|d| vec![None; domain.count(d)]).collect();
    for im in images {
        let id = domain.id(&im.from)?;
        slots[id.dim][id.index] = Some(im.to.resolve(&codomain)?);
    }
    let assignment = slots
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|s| s.ok_or_else(|| Error::InvalidMap("a simplex has no image".to_string())))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    ComplexMap::new(domain, codomain, assignment)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDoc {
    pub domain: ComplexDoc,
    pub codomain: ComplexDoc,
    pub images: Vec<ImageDoc>,
}

impl MapDoc {
    pub fn from_map(map: &ComplexMap) -> Self {
        MapDoc {
            domain: ComplexDoc::from_complex(map.domain()),
            codomain: ComplexDoc::from_complex(map.codomain()),
            images: images_of(map),
        }
    }

    pub fn to_map(&self) -> Result<ComplexMap> {
        let domain = Arc::new(self.domain.to_complex()?);
        let codomain = Arc::new(self.codomain.to_complex()?);
        map_from_images(domain, codomain, &self.images)
    }

    pub fn to_inclusion(&self) -> Result<Inclusion> {
        Inclusion::new(self.to_map()?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LevelDoc {
    /// `s_n` and `t_n` of each element, by label, in element order.
    pub source: Vec<String>,
    pub target: Vec<String>,
    /// `[a, b, a ∗ b]`.
    pub compose: Vec<[String; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OmegaDoc {
    pub elements: Vec<String>,
    pub levels: Vec<LevelDoc>,
}

impl OmegaDoc {
    pub fn from_omega(c: &OmegaCat) -> Self {
        let lab = |x: usize| c.label(x).to_string();
        let levels = c
            .levels()
            .iter()
            .map(|l| LevelDoc {
                source: l.source.iter().map(|&x| lab(x)).collect(),
                target: l.target.iter().map(|&x| lab(x)).collect(),
                compose: l.compose.iter().map(|(&(a, b), &ab)| [lab(a), lab(b), lab(ab)]).collect(),
            })
            .collect();
        OmegaDoc {
            elements: c.labels().to_vec(),
            levels,
        }
    }

    /// Rebuilds the tables and checks every axiom.
    pub fn to_omega(&self) -> Result<OmegaCat> {
        let raw = OmegaCat::from_tables(self.elements.clone(), Vec::new())?;
        let find = |l: &str| raw.element_or_err(l);
        let mut levels = Vec::new();
        for l in &self.levels {
            if l.source.len() != self.elements.len() || l.target.len() != self.elements.len() {
                return Err(Error::InvalidOmegaCat(
                    "every element needs a source and a target at each level".to_string(),
                ));
            }
            let mut level = Level {
                source: l.source.iter().map(|s| find(s)).collect::<Result<_>>()?,
                target: l.target.iter().map(|s| find(s)).collect::<Result<_>>()?,
                compose: Default::default(),
            };
            for [a, b, ab] in &l.compose {
                level.compose.insert((find(a)?, find(b)?), find(ab)?);
            }
            levels.push(level);
        }
        OmegaCat::new(self.elements.clone(), levels)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellDoc {
    pub dim: usize,
    pub m: Vec<String>,
    pub p: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellsDoc {
    pub n: usize,
    pub counts: Vec<usize>,
    pub cells: Vec<CellDoc>,
}

impl CellsDoc {
    pub fn new(n: usize, cells: &[Cell]) -> Self {
        let mut counts = vec![0; n + 1];
        for c in cells {
            counts[c.dim()] += 1;
        }
        CellsDoc {
            n,
            counts,
            cells: cells
                .iter()
                .map(|c| CellDoc {
                    dim: c.dim(),
                    m: c.m.iter().map(|f| f.to_string()).collect(),
                    p: c.p.iter().map(|f| f.to_string()).collect(),
                })
                .collect(),
        }
    }

    pub fn to_cells(&self) -> Result<Vec<Cell>> {
        self.cells
            .iter()
            .map(|c| {
                let parse = |v: &[String]| v.iter().map(|f| f.parse()).collect::<Result<_>>();
                Cell::new(parse(&c.m)?, parse(&c.p)?)
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDoc {
    pub objects: Vec<String>,
    /// `[label, source, target]`; identities come first, one per object.
    pub morphisms: Vec<[String; 3]>,
    /// `[g, f, g ∘ f]`.
    pub compose: Vec<[String; 3]>,
}

impl CategoryDoc {
    pub fn from_category(c: &FiniteCategory) -> Self {
        let obj = |i: usize| c.objects()[i].clone();
        let mut order: Vec<usize> = (0..c.objects().len()).map(|x| c.identity(x)).collect();
        order.extend((0..c.morphisms().len()).filter(|&f| !c.is_identity(f)));
        let lab = |f: usize| c.morphisms()[f].label.clone();
        CategoryDoc {
            objects: c.objects().to_vec(),
            morphisms: order
                .iter()
                .map(|&f| {
                    let m = &c.morphisms()[f];
                    [m.label.clone(), obj(m.source), obj(m.target)]
                })
                .collect(),
            compose: c
                .composition_table()
                .iter()
                .map(|(&(g, f), &gf)| [lab(g), lab(f), lab(gf)])
                .collect(),
        }
    }

    pub fn to_category(&self) -> Result<FiniteCategory> {
        let bad = |m: String| Error::InvalidParameters(m);
        let obj = |l: &str| {
            self.objects
                .iter()
                .position(|o| o == l)
                .ok_or_else(|| bad(format!("unknown object `{l}`")))
        };
        let morphisms = self
            .morphisms
            .iter()
            .map(|[l, s, t]| {
                Ok(Morphism {
                    label: l.clone(),
                    source: obj(s)?,
                    target: obj(t)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let arrow = |l: &str| {
            morphisms
                .iter()
                .position(|m| m.label == l)
                .ok_or_else(|| bad(format!("unknown morphism `{l}`")))
        };
        let identity = (0..self.objects.len()).collect();
        let mut compose = std::collections::BTreeMap::new();
        for [g, f, gf] in &self.compose {
            compose.insert((arrow(g)?, arrow(f)?), arrow(gf)?);
        }
        FiniteCategory::new(self.objects.clone(), morphisms, identity, compose)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessDoc {
    pub generator: GeneratorSpec,
    pub failure: Failure,
    /// The complex the check ran against.
    pub target: ComplexDoc,
    /// The map out of the generator's domain.
    pub attempt: Vec<ImageDoc>,
    /// Two distinct extensions when fillers are not unique.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub extensions: Vec<Vec<ImageDoc>>,
}

impl WitnessDoc {
    pub fn from_witness(w: &Witness) -> Self {
        WitnessDoc {
            generator: w.generator.clone(),
            failure: w.failure,
            target: ComplexDoc::from_complex(w.problem.target()),
            attempt: images_of(w.problem.attempt()),
            extensions: w.extensions.iter().map(images_of).collect(),
        }
    }

    pub fn to_witness(&self) -> Result<Witness> {
        let inclusion = shapes::make_inclusion(&self.generator)?;
        let target = Arc::new(self.target.to_complex()?);
        let attempt = map_from_images(inclusion.domain().clone(), target.clone(), &self.attempt)?;
        let extensions = self
            .extensions
            .iter()
            .map(|e| map_from_images(inclusion.codomain().clone(), target.clone(), e))
            .collect::<Result<Vec<_>>>()?;
        Ok(Witness {
            generator: self.generator.clone(),
            problem: LiftingProblem::new(inclusion, attempt)?,
            failure: self.failure,
            extensions,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDoc {
    pub property: Property,
    pub bound: usize,
    pub verdict: Verdict,
    pub problems_checked: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
}

impl ReportDoc {
    pub fn from_report(r: &CheckReport) -> Self {
        ReportDoc {
            property: r.property,
            bound: r.bound,
            verdict: r.verdict,
            problems_checked: r.problems_checked,
            witness: r.witness.as_ref().map(WitnessDoc::from_witness),
        }
    }

    pub fn to_report(&self) -> Result<CheckReport> {
        Ok(CheckReport {
            property: self.property,
            bound: self.bound,
            verdict: self.verdict,
            witness: self.witness.as_ref().map(|w| w.to_witness()).transpose()?,
            problems_checked: self.problems_checked,
        })
    }
}

/// A list of simplices of one complex, such as detected equivalences.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimplicesDoc {
    pub description: String,
    pub simplices: Vec<String>,
}
