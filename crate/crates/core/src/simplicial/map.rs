//! Stratified maps and inclusions.

use std::collections::HashMap;
use std::sync::Arc;

use super::complex::{SimplexId, SimplexRef, StratifiedComplex};
use crate::error::{Error, Result};

/// A simplicial map preserving thinness, given on nondegenerate simplices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexMap {
    domain: Arc<StratifiedComplex>,
    codomain: Arc<StratifiedComplex>,
    assignment: Vec<Vec<SimplexRef>>,
}

impl ComplexMap {
    /// Validated constructor: faces must commute and thin simplices must land on thin ones.
    pub fn new(
        domain: Arc<StratifiedComplex>,
        codomain: Arc<StratifiedComplex>,
        assignment: Vec<Vec<SimplexRef>>,
    ) -> Result<Self> {
        let map = Self::new_unchecked(domain, codomain, assignment);
        map.check()?;
        Ok(map)
    }

    pub fn new_unchecked(
        domain: Arc<StratifiedComplex>,
        codomain: Arc<StratifiedComplex>,
        mut assignment: Vec<Vec<SimplexRef>>,
    ) -> Self {
        assignment.resize(domain.bound() + 1, Vec::new());
        ComplexMap {
            domain,
            codomain,
            assignment,
        }
    }

    /// Builds a map from `(domain label, codomain simplex)` pairs written in
    /// [`StratifiedComplex::describe`] notation.
    pub fn from_labels(
        domain: Arc<StratifiedComplex>,
        codomain: Arc<StratifiedComplex>,
        pairs: &[(&str, &str)],
    ) -> Result<Self> {
        let mut slots: Vec<Vec<Option<SimplexRef>>> = (0..=domain.bound())
            .map(|d| vec![None; domain.count(d)])
            .collect();
        for (from, to) in pairs {
            let id = domain.id(from)?;
            slots[id.dim][id.index] = Some(codomain.parse_ref(to)?);
        }
        let mut assignment = Vec::new();
        for row in slots {
            let mut out = Vec::new();
            for (i, s) in row.into_iter().enumerate() {
                out.push(s.ok_or_else(|| {
                    Error::InvalidMap(format!("no image for a simplex (index {i})"))
                })?);
            }
            assignment.push(out);
        }
        Self::new(domain, codomain, assignment)
    }

    pub fn identity(x: Arc<StratifiedComplex>) -> Self {
        let assignment = (0..=x.bound())
            .map(|d| x.ids(d).map(SimplexRef::nondegenerate).collect())
            .collect();
        ComplexMap {
            domain: x.clone(),
            codomain: x,
            assignment,
        }
    }

    pub fn domain(&self) -> &Arc<StratifiedComplex> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<StratifiedComplex> {
        &self.codomain
    }

    pub fn assignment(&self) -> &[Vec<SimplexRef>] {
        &self.assignment
    }

    pub fn image(&self, id: SimplexId) -> &SimplexRef {
        &self.assignment[id.dim][id.index]
    }

    /// Image of an arbitrary simplex of the domain.
    pub fn apply(&self, s: &SimplexRef) -> SimplexRef {
        self.image(s.target()).degenerate_by(s.surjection())
    }

    /// All problems with this map; empty when it is a valid stratified map.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let (x, y) = (&*self.domain, &*self.codomain);
        for id in x.all_ids() {
            let Some(img) = self.assignment.get(id.dim).and_then(|r| r.get(id.index)) else {
                out.push(format!("no image for `{}`", x.label(id)));
                continue;
            };
            if !y.contains(img.target()) || img.dim() != id.dim {
                out.push(format!(
                    "image of `{}` is not a {}-simplex of the codomain",
                    x.label(id),
                    id.dim
                ));
                continue;
            }
            if x.is_marked(id) && !y.is_thin(img) {
                out.push(format!(
                    "marked `{}` goes to nonthin `{}`",
                    x.label(id),
                    y.describe(img)
                ));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for id in x.all_ids().filter(|id| id.dim > 0) {
            let img = self.image(id);
            for (i, face) in x.faces(id).iter().enumerate() {
                if y.face_unchecked(img, i) != self.apply(face) {
                    out.push(format!(
                        "face {i} of `{}` does not commute with the map",
                        x.label(id)
                    ));
                }
            }
        }
        out
    }

    fn check(&self) -> Result<()> {
        match self.violations().into_iter().next() {
            None => Ok(()),
            Some(v) => Err(Error::InvalidMap(v)),
        }
    }

    /// `after ∘ self`.
    pub fn then(&self, after: &ComplexMap) -> Result<ComplexMap> {
        if self.codomain != after.domain && *self.codomain != *after.domain {
            return Err(Error::InvalidMap(
                "codomain and domain do not agree".to_string(),
            ));
        }
        let assignment = self
            .assignment
            .iter()
            .map(|row| row.iter().map(|s| after.apply(s)).collect())
            .collect();
        Ok(ComplexMap {
            domain: self.domain.clone(),
            codomain: after.codomain.clone(),
            assignment,
        })
    }

    /// Same assignment seen with a different (structurally equal) codomain or domain.
    pub fn retarget(
        &self,
        domain: Arc<StratifiedComplex>,
        codomain: Arc<StratifiedComplex>,
    ) -> Result<ComplexMap> {
        ComplexMap::new(domain, codomain, self.assignment.clone())
    }

    /// The assignment written as `(domain label, codomain description)` pairs.
    pub fn describe(&self) -> Vec<(String, String)> {
        self.domain
            .all_ids()
            .map(|id| {
                (
                    self.domain.label(id).to_string(),
                    self.codomain.describe(self.image(id)),
                )
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InclusionKind {
    /// Both regular and entire.
    Isomorphism,
    Regular,
    Entire,
    Mixed,
}

/// A monomorphism: injective on nondegenerate simplices, with nondegenerate images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inclusion {
    map: ComplexMap,
    kind: InclusionKind,
    preimage: HashMap<SimplexId, SimplexId>,
}

impl Inclusion {
    pub fn new(map: ComplexMap) -> Result<Self> {
        map.check()?;
        let mut preimage = HashMap::new();
        for id in map.domain.all_ids() {
            let img = map.image(id);
            if img.is_degenerate() {
                return Err(Error::NotMono(format!(
                    "`{}` is sent to a degenerate simplex",
                    map.domain.label(id)
                )));
            }
            if let Some(prev) = preimage.insert(img.target(), id) {
                return Err(Error::NotMono(format!(
                    "`{}` and `{}` have the same image",
                    map.domain.label(prev),
                    map.domain.label(id)
                )));
            }
        }
        let (u, v) = (&*map.domain, &*map.codomain);
        let regular = u
            .all_ids()
            .all(|id| u.is_marked(id) == v.is_marked(map.image(id).target()));
        let entire = u.total() == v.total();
        let kind = match (regular, entire) {
            (true, true) => InclusionKind::Isomorphism,
            (true, false) => InclusionKind::Regular,
            (false, true) => InclusionKind::Entire,
            (false, false) => InclusionKind::Mixed,
        };
        Ok(Inclusion {
            map,
            kind,
            preimage,
        })
    }

    /// Matches simplices by label.
    pub fn by_labels(
        domain: Arc<StratifiedComplex>,
        codomain: Arc<StratifiedComplex>,
    ) -> Result<Self> {
        let mut assignment = Vec::new();
        for d in 0..=domain.bound() {
            let mut row = Vec::new();
            for id in domain.ids(d) {
                let label = domain.label(id);
                let target = codomain.lookup(label).ok_or_else(|| {
                    Error::NotMono(format!("`{label}` has no counterpart in the codomain"))
                })?;
                row.push(SimplexRef::nondegenerate(target));
            }
            assignment.push(row);
        }
        Inclusion::new(ComplexMap::new(domain, codomain, assignment)?)
    }

    /// The subcomplex of `ambient` on the simplices selected by `keep`, with
    /// the marking selected by `marked` (restricted to kept, marked simplices).
    pub fn subcomplex(
        ambient: Arc<StratifiedComplex>,
        keep: impl Fn(SimplexId) -> bool,
        marked: impl Fn(SimplexId) -> bool,
    ) -> Result<Self> {
        let sub = Arc::new(sub_complex(&ambient, &keep, &marked)?);
        Inclusion::by_labels(sub, ambient)
    }

    pub fn map(&self) -> &ComplexMap {
        &self.map
    }

    pub fn domain(&self) -> &Arc<StratifiedComplex> {
        self.map.domain()
    }

    pub fn codomain(&self) -> &Arc<StratifiedComplex> {
        self.map.codomain()
    }

    pub fn kind(&self) -> InclusionKind {
        self.kind
    }

    pub fn is_regular(&self) -> bool {
        matches!(self.kind, InclusionKind::Regular | InclusionKind::Isomorphism)
    }

    pub fn is_entire(&self) -> bool {
        matches!(self.kind, InclusionKind::Entire | InclusionKind::Isomorphism)
    }

    /// The domain simplex mapping onto a codomain simplex, if any.
    pub fn preimage(&self, id: SimplexId) -> Option<SimplexId> {
        self.preimage.get(&id).copied()
    }
}

/// Copies the selected simplices, keeping labels; faces must stay inside the selection.
pub(crate) fn sub_complex(
    ambient: &StratifiedComplex,
    keep: &dyn Fn(SimplexId) -> bool,
    marked: &dyn Fn(SimplexId) -> bool,
) -> Result<StratifiedComplex> {
    let mut renumber: HashMap<SimplexId, SimplexId> = HashMap::new();
    let mut builder = super::ComplexBuilder::new(ambient.bound());
    for id in ambient.all_ids().filter(|&id| keep(id)) {
        let mut faces = Vec::new();
        for f in ambient.faces(id) {
            let target = renumber.get(&f.target()).copied().ok_or_else(|| {
                Error::InvalidParameters(format!(
                    "selection is not closed under faces at `{}`",
                    ambient.label(id)
                ))
            })?;
            faces.push(SimplexRef::from_parts(target, f.surjection().into()));
        }
        let new = builder.add_with_dim(
            ambient.label(id),
            id.dim,
            faces,
            id.dim > 0 && marked(id) && ambient.is_marked(id),
        )?;
        renumber.insert(id, new);
    }
    Ok(builder.build_unchecked())
}
