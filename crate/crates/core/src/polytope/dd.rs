//! Incremental double description method.
//!
//! The polytope `{x : ⟨aᵢ,x⟩ ≤ bᵢ}` is lifted to the cone
//! `{(t,x) : t ≥ 0, bᵢ·t − ⟨aᵢ,x⟩ ≥ 0}` in one more dimension. Starting from
//! the simplicial cone of `n + 1` independent rows, the remaining rows are
//! inserted one at a time. Each insertion keeps rays on the feasible side,
//! drops the infeasible ones and combines every adjacent feasible/infeasible
//! pair into a ray on the new hyperplane. Rays left with `t = 0` at the end
//! are recession directions; the others are the vertices.

use std::cmp::Ordering;

use log::{debug, trace};
use rayon::prelude::*;

use super::rowset::RowSet;
use super::{HPolytope, PolytopeError, VertexSet};
use crate::linalg;
use crate::scalar::{cmp_vectors, dot, Field};

/// How a feasible/infeasible ray pair is certified adjacent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Adjacency {
    /// The rows tight at both rays have rank `n − 1` in the lifted space.
    Algebraic,
    /// No third ray is tight on every row the pair shares.
    Combinatorial,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DdOptions {
    pub adjacency: Adjacency,
    /// Zero test for the float backend, applied after rows are scaled to
    /// unit length.
    pub zero_tol: f64,
    /// Componentwise tolerance for merging float vertices.
    pub dedup_tol: f64,
}

impl DdOptions {
    /// Algebraic adjacency on exact fields; combinatorial on float, where a
    /// rank decision would need its own tolerance.
    pub fn for_field<F: Field>() -> Self {
        DdOptions {
            adjacency: if F::EXACT {
                Adjacency::Algebraic
            } else {
                Adjacency::Combinatorial
            },
            zero_tol: 1e-9,
            dedup_tol: 1e-8,
        }
    }
}

#[derive(Clone)]
struct Ray<F> {
    coords: Vec<F>,
    zero: RowSet,
}

pub fn enumerate_vertices<F: Field>(p: &HPolytope<F>) -> Result<VertexSet<F>, PolytopeError> {
    enumerate_vertices_with(p, &DdOptions::for_field::<F>())
}

struct Engine<'a, F> {
    rows: Vec<Vec<F>>,
    opts: &'a DdOptions,
    lifted_dim: usize,
}

impl<F: Field> Engine<'_, F> {
    fn classify(&self, value: &F) -> Ordering {
        value.sign_tol(self.opts.zero_tol)
    }

    fn adjacent(&self, rays: &[Ray<F>], i: usize, j: usize) -> bool {
        if rays[i].zero.intersection_len(&rays[j].zero) + 2 < self.lifted_dim {
            return false;
        }
        let common = rays[i].zero.intersection(&rays[j].zero);
        match self.opts.adjacency {
            Adjacency::Algebraic => {
                let tight: Vec<Vec<F>> = common.iter().map(|r| self.rows[r].clone()).collect();
                linalg::rank(&tight) + 2 == self.lifted_dim
            }
            Adjacency::Combinatorial => !rays
                .iter()
                .enumerate()
                .any(|(k, r)| k != i && k != j && common.is_subset(&r.zero)),
        }
    }

    /// Greedily picks `lifted_dim` independent rows in insertion order.
    fn initial_basis(&self, order: &[usize]) -> Option<Vec<usize>> {
        let mut basis: Vec<usize> = Vec::with_capacity(self.lifted_dim);
        let mut current: Vec<Vec<F>> = Vec::with_capacity(self.lifted_dim);
        for &r in order {
            current.push(self.rows[r].clone());
            if linalg::rank(&current) == current.len() {
                basis.push(r);
                if basis.len() == self.lifted_dim {
                    return Some(basis);
                }
            } else {
                current.pop();
            }
        }
        None
    }

    fn insert(&self, rays: Vec<Ray<F>>, row: usize) -> Vec<Ray<F>> {
        let values: Vec<F> = rays
            .par_iter()
            .map(|r| dot(&self.rows[row], &r.coords))
            .collect();
        let signs: Vec<Ordering> = values.iter().map(|v| self.classify(v)).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&k| signs[k].is_lt()).collect();
        if neg.is_empty() {
            return rays
                .into_iter()
                .zip(&signs)
                .map(|(mut r, s)| {
                    if s.is_eq() {
                        r.zero.insert(row);
                    }
                    r
                })
                .collect();
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| signs[k].is_gt()).collect();

        let created: Vec<Ray<F>> = pos
            .par_iter()
            .flat_map_iter(|&p| {
                let rays = &rays;
                let values = &values;
                neg.iter().filter_map(move |&q| {
                    if !self.adjacent(rays, p, q) {
                        return None;
                    }
                    // (a·p)·q − (a·q)·p, both coefficients positive
                    let mut coords: Vec<F> = rays[q]
                        .coords
                        .iter()
                        .zip(&rays[p].coords)
                        .map(|(xq, xp)| values[p].clone() * xq - values[q].clone() * xp)
                        .collect();
                    F::scale_ray(&mut coords);
                    let mut zero = rays[p].zero.intersection(&rays[q].zero);
                    zero.insert(row);
                    Some(Ray { coords, zero })
                })
            })
            .collect();

        let mut next: Vec<Ray<F>> = Vec::with_capacity(rays.len() - neg.len() + created.len());
        for (mut r, s) in rays.into_iter().zip(&signs) {
            match s {
                Ordering::Greater => next.push(r),
                Ordering::Equal => {
                    r.zero.insert(row);
                    next.push(r);
                }
                Ordering::Less => {}
            }
        }
        next.extend(created);
        next
    }
}

/// Vertex enumeration by the double description method.
///
/// Rows are inserted in the order given by the polytope, so callers control
/// the insertion order by ordering the halfspaces.
pub fn enumerate_vertices_with<F: Field>(
    p: &HPolytope<F>,
    opts: &DdOptions,
) -> Result<VertexSet<F>, PolytopeError> {
    p.check()?;
    let n = p.dimension;
    let h = p.halfspaces.len();
    let t_row = h;
    let mut rows: Vec<Vec<F>> = p.halfspaces.iter().map(|hs| hs.homogeneous_row()).collect();
    let mut t = vec![F::zero(); n + 1];
    t[0] = F::one();
    rows.push(t);
    for row in rows.iter_mut() {
        F::scale_row(row);
    }
    let engine = Engine {
        rows,
        opts,
        lifted_dim: n + 1,
    };

    let order: Vec<usize> = std::iter::once(t_row).chain(0..h).collect();
    let basis = engine.initial_basis(&order).ok_or(PolytopeError::Unbounded)?;
    let basis_rows: Vec<Vec<F>> = basis.iter().map(|&r| engine.rows[r].clone()).collect();
    let inverse = linalg::inverse(&basis_rows).ok_or(PolytopeError::Unbounded)?;

    let mut rays: Vec<Ray<F>> = (0..=n)
        .map(|j| {
            let mut coords: Vec<F> = inverse.iter().map(|row| row[j].clone()).collect();
            F::scale_ray(&mut coords);
            let mut zero = RowSet::with_capacity(h + 1);
            for (k, &r) in basis.iter().enumerate() {
                if k != j {
                    zero.insert(r);
                }
            }
            Ray { coords, zero }
        })
        .collect();

    let mut inserted = RowSet::with_capacity(h + 1);
    for &r in &basis {
        inserted.insert(r);
    }
    let remaining: Vec<usize> = order.into_iter().filter(|&r| !inserted.contains(r)).collect();
    let total = remaining.len();
    for (step, row) in remaining.into_iter().enumerate() {
        rays = engine.insert(rays, row);
        trace!("inserted row {row}: {} rays", rays.len());
        if (step + 1) % 64 == 0 || step + 1 == total {
            debug!("{}/{total} halfspaces inserted, {} rays", step + 1, rays.len());
        }
    }

    let mut out: Vec<(Vec<F>, Vec<usize>)> = Vec::with_capacity(rays.len());
    for ray in rays {
        let scale = &ray.coords[0];
        if scale.sign_tol(opts.zero_tol) != Ordering::Greater {
            return Err(PolytopeError::Unbounded);
        }
        let vertex: Vec<F> = ray.coords[1..].iter().map(|x| x.clone() / scale).collect();
        let tight: Vec<usize> = ray.zero.iter().filter(|&r| r != t_row).collect();
        out.push((vertex, tight));
    }
    out.sort_by(|a, b| cmp_vectors(&a.0, &b.0));
    if !F::EXACT {
        out = merge_close(out, opts.dedup_tol);
    }
    let (vertices, tight_sets) = out.into_iter().unzip();
    Ok(VertexSet {
        vertices,
        tight_sets,
    })
}

fn merge_close<F: Field>(sorted: Vec<(Vec<F>, Vec<usize>)>, tol: f64) -> Vec<(Vec<F>, Vec<usize>)> {
    let mut merged: Vec<(Vec<F>, Vec<usize>)> = Vec::with_capacity(sorted.len());
    for (v, tight) in sorted {
        let close = |u: &Vec<F>| {
            u.iter()
                .zip(&v)
                .all(|(a, b)| (a.clone() - b).sign_tol(tol) == Ordering::Equal)
        };
        if let Some(existing) = merged.iter_mut().find(|(u, _)| close(u)) {
            existing.1.extend(tight);
            existing.1.sort_unstable();
            existing.1.dedup();
        } else {
            merged.push((v, tight));
        }
    }
    merged
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::*;
    use crate::polytope::{max_squared_norm, Halfspace};
    use crate::scalar::rational;

    fn cube(n: usize) -> HPolytope<BigRational> {
        let mut hs = Vec::new();
        for i in 0..n {
            for s in [1, -1] {
                let mut v = vec![rational(0, 1); n];
                v[i] = rational(s, 1);
                hs.push(Halfspace::polar(v));
            }
        }
        HPolytope::new(n, hs)
    }

    #[test]
    fn square_from_cross_polytope() {
        let v = enumerate_vertices(&cube(2)).unwrap();
        let one = rational(1, 1);
        let expect: Vec<Vec<BigRational>> = vec![
            vec![-one.clone(), -one.clone()],
            vec![-one.clone(), one.clone()],
            vec![one.clone(), -one.clone()],
            vec![one.clone(), one.clone()],
        ];
        assert_eq!(v.vertices, expect);
    }

    #[test]
    fn cube_vertices_and_tight_sets() {
        for adjacency in [Adjacency::Algebraic, Adjacency::Combinatorial] {
            let opts = DdOptions {
                adjacency,
                ..DdOptions::for_field::<BigRational>()
            };
            let v = enumerate_vertices_with(&cube(3), &opts).unwrap();
            assert_eq!(v.len(), 8);
            assert!(v.tight_sets.iter().all(|t| t.len() == 3));
            let (m, _) = max_squared_norm(&v).unwrap();
            assert_eq!(m, rational(3, 1));
        }
    }

    #[test]
    fn float_cube() {
        let p = cube(4);
        let hs = p
            .halfspaces
            .iter()
            .map(|h| Halfspace::polar(h.normal.iter().map(Field::to_f64).collect()))
            .collect();
        let v = enumerate_vertices(&HPolytope::new(4, hs)).unwrap();
        assert_eq!(v.len(), 16);
        assert!(v.vertices.iter().flatten().all(|x| (x.abs() - 1.0).abs() < 1e-12));
    }

    #[test]
    fn half_plane_is_unbounded() {
        let r = |a: i64, b: i64| vec![rational(a, 1), rational(b, 1)];
        let p = HPolytope::new(
            2,
            vec![
                Halfspace::polar(r(1, 0)),
                Halfspace::polar(r(0, 1)),
                Halfspace::polar(r(-1, 0)),
            ],
        );
        assert_eq!(enumerate_vertices(&p), Err(PolytopeError::Unbounded));
        // normals that do not span
        let p = HPolytope::new(2, vec![Halfspace::polar(r(1, 0)), Halfspace::polar(r(-1, 0))]);
        assert_eq!(enumerate_vertices(&p), Err(PolytopeError::Unbounded));
    }

    #[test]
    fn degenerate_pyramid_apex() {
        // square pyramid: apex has four tight facets in dimension 3
        let r = |v: [i64; 3]| v.iter().map(|&x| rational(x, 1)).collect::<Vec<_>>();
        let p = HPolytope::new(
            3,
            vec![
                Halfspace::polar(r([1, 0, 1])),
                Halfspace::polar(r([-1, 0, 1])),
                Halfspace::polar(r([0, 1, 1])),
                Halfspace::polar(r([0, -1, 1])),
                Halfspace::polar(r([0, 0, -1])),
            ],
        );
        let v = enumerate_vertices(&p).unwrap();
        assert_eq!(v.len(), 5);
        let apex = v
            .vertices
            .iter()
            .position(|x| x == &r([0, 0, 1]))
            .unwrap();
        assert_eq!(v.tight_sets[apex], vec![0, 1, 2, 3]);
    }
}
