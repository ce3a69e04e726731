//! Homotopies of maps and the internal hom, at small sizes.

use std::collections::HashMap;
use std::sync::Arc;

use super::engine::Engine;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::shapes;
use crate::simplicial::{
    ComplexBuilder, ComplexMap, Inclusion, Product, SimplexRef, StratifiedComplex,
};

type Assignment = Vec<Vec<SimplexRef>>;

/// Whether `f` and `g` are joined by a map `X × Δ[1]♯ → A` restricting to
/// `f` on `X × {0}` and to `g` on `X × {1}`.
pub fn homotopic_maps(f: &ComplexMap, g: &ComplexMap, budget: &mut Budget) -> Result<bool> {
    if **f.domain() != **g.domain() || **f.codomain() != **g.codomain() {
        return Err(Error::InvalidMap("maps are not parallel".to_string()));
    }
    let interval = shapes::standard(1).sharp();
    let product = Product::new(f.domain(), &interval);
    let cylinder = Arc::new(product.complex().clone());
    let ends = Inclusion::subcomplex(
        cylinder,
        |id| product.components(id).1.target().dim == 0,
        |_| true,
    )?;
    let mut assignment = Vec::new();
    for d in 0..=ends.domain().bound() {
        let mut row = Vec::new();
        for id in ends.domain().ids(d) {
            let (a, b) = product.components(ends.map().image(id).target());
            let end = if interval.label(b.target()) == "0" { f } else { g };
            row.push(end.apply(a));
        }
        assignment.push(row);
    }
    let attempt = ComplexMap::new(ends.domain().clone(), f.codomain().clone(), assignment)?;
    let found = Engine::new(f.codomain().clone()).extensions(&ends, &attempt, 1, budget)?;
    Ok(!found.is_empty())
}

/// `hom(X, A)` up to dimension `bound`: `n`-simplices are maps `X × Δ[n] → A`,
/// thin when they are also maps out of `X × Δ[n]_t`.
pub fn hom_complex(
    x: &Arc<StratifiedComplex>,
    a: &Arc<StratifiedComplex>,
    bound: usize,
    budget: &mut Budget,
) -> Result<StratifiedComplex> {
    let mut engine = Engine::new(a.clone());
    let deltas: Vec<StratifiedComplex> = (0..=bound).map(shapes::standard).collect();
    let products: Vec<Product> = deltas.iter().map(|d| Product::new(x, d)).collect();
    let mut builder = ComplexBuilder::new(bound);
    let mut normal: Vec<HashMap<Assignment, SimplexRef>> = Vec::new();
    for n in 0..=bound {
        let domain = Arc::new(products[n].complex().clone());
        let maps = engine.maps(&domain, budget)?;
        let mut table = HashMap::new();
        for (count, phi) in maps.iter().enumerate() {
            let assignment = phi.assignment().to_vec();
            let face_maps: Vec<Assignment> = if n == 0 {
                Vec::new()
            } else {
                (0..=n)
                    .map(|i| {
                        reindex(&products, &deltas, n - 1, n, |v| if v >= i { v + 1 } else { v }, &assignment)
                    })
                    .collect()
            };
            let faces: Vec<SimplexRef> = face_maps.iter().map(|m| normal[n - 1][m].clone()).collect();
            // ψ is degenerate iff ψ = s_i ∂_i ψ for some i
            let degenerate = (0..n).find_map(|i| {
                let lifted = reindex(&products, &deltas, n, n - 1, |v| if v > i { v - 1 } else { v }, &face_maps[i]);
                (lifted == assignment).then(|| {
                    let sigma: Vec<u8> = (0..=n).map(|j| if j <= i { j as u8 } else { (j - 1) as u8 }).collect();
                    faces[i].degenerate_by(&sigma)
                })
            });
            let entry = match degenerate {
                Some(r) => r,
                None => {
                    let marked = n > 0 && thin_on_top(&products[n], x, n, phi, a);
                    let id = builder.add_with_dim(format!("h{n}_{count}"), n, faces, marked)?;
                    SimplexRef::nondegenerate(id)
                }
            };
            table.insert(assignment, entry);
        }
        normal.push(table);
    }
    Ok(builder.build_unchecked())
}

/// Vertex list of a simplex of `Δ[n]`.
fn vertex_list(delta: &StratifiedComplex, s: &SimplexRef) -> Vec<usize> {
    delta
        .vertices(s)
        .iter()
        .map(|v| delta.label(*v).parse().expect("vertex labels are numbers"))
        .collect()
}

/// The simplex of `Δ[n]` with the given weakly increasing vertex list.
fn with_vertices(delta: &StratifiedComplex, n: usize, verts: &[usize]) -> SimplexRef {
    let mut distinct = verts.to_vec();
    distinct.dedup();
    let target = delta
        .id(&shapes::face_label(&distinct, n))
        .expect("face of a simplex");
    let surjection: Vec<usize> = verts
        .iter()
        .map(|v| distinct.iter().position(|d| d == v).unwrap())
        .collect();
    let theta = crate::simplicial::MonotoneMap::new(verts.len() - 1, distinct.len() - 1, surjection)
        .expect("monotone");
    delta
        .act(&SimplexRef::nondegenerate(target), &theta)
        .expect("operator fits")
}

/// `ψ ∘ (id × μ)` where `ψ : X × Δ[to] → A` and `μ : [from] → [to]` acts on vertices.
fn reindex(
    products: &[Product],
    deltas: &[StratifiedComplex],
    from: usize,
    to: usize,
    mu: impl Fn(usize) -> usize,
    psi: &[Vec<SimplexRef>],
) -> Assignment {
    let (src, dst) = (&products[from], &products[to]);
    (0..=src.complex().bound())
        .map(|d| {
            src.complex()
                .ids(d)
                .map(|id| {
                    let (a, b) = src.components(id);
                    let verts: Vec<usize> = vertex_list(&deltas[from], b).into_iter().map(&mu).collect();
                    let b2 = with_vertices(&deltas[to], to, &verts);
                    let s = dst.locate(a, &b2).expect("product simplex");
                    psi[s.target().dim][s.target().index].degenerate_by(s.surjection())
                })
                .collect()
        })
        .collect()
}

/// Whether `φ : X × Δ[n] → A` also respects the marking of `X × Δ[n]_t`.
fn thin_on_top(
    product: &Product,
    x: &StratifiedComplex,
    n: usize,
    phi: &ComplexMap,
    a: &StratifiedComplex,
) -> bool {
    product.complex().all_ids().all(|id| {
        let (ca, cb) = product.components(id);
        let newly_thin = !cb.is_degenerate() && cb.dim() == n && x.is_thin(ca);
        !newly_thin || a.is_thin(phi.image(id))
    })
}
