//! Exact rational polytopes: convex hulls of finite point sets, facet and
//! affine-hull descriptions, lattice-point counts, and volumes.
//!
//! Everything stays in arbitrary-precision rationals. Extreme points are
//! filtered with an exact phase-one simplex (Bland's rule, so termination
//! is unconditional), facets are enumerated from supporting hyperplanes
//! through extreme points, and volumes come from a recursive star
//! triangulation. Intended for ambient dimension at most 6.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, Vector};
use crate::ratio::Rat;

// ---------------------------------------------------------------------------
// Exact feasibility via phase-one simplex
// ---------------------------------------------------------------------------

/// Finds x >= 0 with `sum x_j columns[j] = target`, or None. Bland's rule
/// keeps the exact simplex free of cycles.
fn nonnegative_combination(columns: &[Vector], target: &[Rat]) -> Option<Vector> {
    let m = target.len();
    let n = columns.len();
    for c in columns {
        assert_eq!(c.len(), m, "column length mismatch");
    }
    // tableau rows: [A | b], artificial basis implicit; rows flipped so b >= 0
    let mut tab: Vec<Vector> = (0..m)
        .map(|i| {
            let mut row: Vector = (0..n).map(|j| columns[j][i].clone()).collect();
            row.push(target[i].clone());
            if row[n].is_negative() {
                for x in row.iter_mut() {
                    *x = -x.clone();
                }
            }
            row
        })
        .collect();
    // basis[i] = column index occupying row i; artificials are n + i
    let mut basis: Vec<usize> = (0..m).map(|i| n + i).collect();
    loop {
        // reduced cost of column j: sum of rows where the basis is artificial
        let mut entering = None;
        for j in 0..n {
            if basis.contains(&j) {
                continue;
            }
            let mut cost = Rat::zero();
            for i in 0..m {
                if basis[i] >= n {
                    cost += &tab[i][j];
                }
            }
            if cost.is_positive() {
                entering = Some(j);
                break; // Bland: smallest improving index
            }
        }
        let Some(j) = entering else {
            // optimal: feasible iff all artificials left the basis at zero
            let feasible = (0..m).all(|i| basis[i] < n || tab[i][n].is_zero());
            if !feasible {
                return None;
            }
            let mut x = vec![Rat::zero(); n];
            for i in 0..m {
                if basis[i] < n {
                    x[basis[i]] = tab[i][n].clone();
                }
            }
            return Some(x);
        };
        // leaving row: minimal ratio, ties broken by smallest basis index
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if tab[i][j].is_positive() {
                let better = match leave {
                    None => true,
                    Some(l) => {
                        let r_i = &tab[i][n] / &tab[i][j];
                        let r_l = &tab[l][n] / &tab[l][j];
                        r_i < r_l || (r_i == r_l && basis[i] < basis[l])
                    }
                };
                if better {
                    leave = Some(i);
                }
            }
        }
        let Some(l) = leave else {
            // unbounded phase-one objective cannot happen; defensive exit
            return None;
        };
        // pivot on (l, j)
        let pivot = tab[l][j].clone();
        for x in tab[l].iter_mut() {
            *x = &*x / &pivot;
        }
        for i in 0..m {
            if i != l && !tab[i][j].is_zero() {
                let factor = tab[i][j].clone();
                let row_l = tab[l].clone();
                for (x, y) in tab[i].iter_mut().zip(&row_l) {
                    *x = &*x - &(&factor * y);
                }
            }
        }
        basis[l] = j;
    }
}

/// Membership of `target` in the convex hull of `points`.
pub fn in_hull(points: &[Vector], target: &[Rat]) -> bool {
    if points.is_empty() {
        return false;
    }
    let columns: Vec<Vector> = points
        .iter()
        .map(|p| {
            let mut c = p.clone();
            c.push(Rat::one());
            c
        })
        .collect();
    let mut t = target.to_vec();
    t.push(Rat::one());
    nonnegative_combination(&columns, &t).is_some()
}

// ---------------------------------------------------------------------------
// Polytope type
// ---------------------------------------------------------------------------

/// A closed halfspace `normal . x <= rhs` (or, as an equation, equality).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Facet {
    pub normal: Vector,
    pub rhs: Rat,
}

impl Facet {
    pub fn eval(&self, x: &[Rat]) -> Rat {
        linalg::dot(&self.normal, x)
    }
}

/// Bounded rational polytope with cross-checked vertex and halfspace
/// descriptions. `equations` cut out the affine hull; `facets` are the
/// maximal proper faces within it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolytope {
    pub ambient: usize,
    pub dim: usize,
    pub vertices: Vec<Vector>,
    pub facets: Vec<Facet>,
    pub equations: Vec<Facet>,
}

/// Clears denominators and common factors, leaving a primitive integer
/// vector; scales `rhs` along. Positive scaling only, so inequality
/// directions survive.
fn primitive_scale(normal: &[Rat], rhs: &Rat) -> (Vector, Rat) {
    let mut denom_lcm = BigInt::one();
    for c in normal.iter().chain([rhs]) {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let scaled: Vec<BigInt> = normal
        .iter()
        .map(|c| (c * Rat::from_integer(denom_lcm.clone())).to_integer())
        .collect();
    let scaled_rhs = (rhs * Rat::from_integer(denom_lcm)).to_integer();
    let mut g = BigInt::zero();
    for x in scaled.iter().chain([&scaled_rhs]) {
        g = g.gcd(x);
    }
    if g.is_zero() {
        g = BigInt::one();
    }
    (
        scaled.into_iter().map(|x| Rat::from_integer(x / &g)).collect(),
        Rat::from_integer(scaled_rhs / &g),
    )
}

/// Reduced row echelon form of the affine-hull equations, each row made
/// primitive with positive leading coefficient: a canonical basis.
fn canonical_equations(points: &[Vector], ambient: usize) -> Vec<Facet> {
    let p0 = &points[0];
    let diffs: Matrix = points[1..]
        .iter()
        .map(|p| linalg::sub_vec(p, p0))
        .collect();
    let normals = if diffs.is_empty() {
        (0..ambient).map(|i| linalg::unit_vec(ambient, i)).collect()
    } else {
        linalg::nullspace(&diffs)
    };
    // nullspace rows are already reduced; normalize scale and sign
    normals
        .into_iter()
        .map(|n| {
            let rhs = linalg::dot(&n, p0);
            let (mut normal, mut rhs) = primitive_scale(&n, &rhs);
            if let Some(lead) = normal.iter().find(|c| !c.is_zero()) {
                if lead.is_negative() {
                    for c in normal.iter_mut() {
                        *c = -c.clone();
                    }
                    rhs = -rhs;
                }
            }
            Facet { normal, rhs }
        })
        .collect()
}

/// Reduces a facet normal modulo the equation rows so that equivalent
/// halfspaces on the affine hull get one canonical form.
fn reduce_modulo_equations(normal: &[Rat], rhs: &Rat, equations: &[Facet]) -> (Vector, Rat) {
    let mut n = normal.to_vec();
    let mut r = rhs.clone();
    for eq in equations {
        let pivot = eq
            .normal
            .iter()
            .position(|c| !c.is_zero())
            .expect("equation with zero normal");
        if !n[pivot].is_zero() {
            let factor = &n[pivot] / &eq.normal[pivot];
            for (x, y) in n.iter_mut().zip(&eq.normal) {
                *x = &*x - &(&factor * y);
            }
            r = &r - &(&factor * &eq.rhs);
        }
    }
    primitive_scale(&n, &r)
}

impl RationalPolytope {
    /// Convex hull of a finite point set.
    pub fn from_points(ambient: usize, points: &[Vector]) -> Result<RationalPolytope> {
        let unique: Vec<Vector> = points
            .iter()
            .inspect(|p| assert_eq!(p.len(), ambient, "point dimension mismatch"))
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if unique.is_empty() {
            return Err(Error::Degenerate("hull of an empty point set".into()));
        }
        let equations = canonical_equations(&unique, ambient);
        let dim = ambient - equations.len();
        // extreme points: not in the hull of the others
        let mut vertices: Vec<Vector> = Vec::new();
        for (i, p) in unique.iter().enumerate() {
            let others: Vec<Vector> = unique
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, q)| q.clone())
                .collect();
            if !in_hull(&others, p) {
                vertices.push(p.clone());
            }
        }
        let facets = enumerate_facets(&vertices, dim, &equations)?;
        Ok(RationalPolytope { ambient, dim, vertices, facets, equations })
    }

    /// True iff `x` satisfies every equation and facet inequality.
    pub fn contains(&self, x: &[Rat]) -> bool {
        self.equations.iter().all(|eq| eq.eval(x) == eq.rhs)
            && self.facets.iter().all(|f| f.eval(x) <= f.rhs)
    }

    /// The dilate k . P.
    pub fn scale(&self, k: u32) -> Result<RationalPolytope> {
        if k == 0 {
            return Err(Error::ShapeMismatch("scaling factor must be positive".into()));
        }
        let factor = Rat::from_integer(BigInt::from(k));
        let points: Vec<Vector> = self
            .vertices
            .iter()
            .map(|v| linalg::scale_vec(&factor, v))
            .collect();
        RationalPolytope::from_points(self.ambient, &points)
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient
    }
}

/// Facets of the hull of `vertices` within their affine hull: supporting
/// hyperplanes spanned by dim affinely independent vertices with all
/// vertices on one side.
fn enumerate_facets(vertices: &[Vector], dim: usize, equations: &[Facet]) -> Result<Vec<Facet>> {
    if dim == 0 {
        return Ok(Vec::new());
    }
    let ambient = vertices[0].len();
    let mut seen: BTreeSet<(Vec<Rat>, Rat)> = BTreeSet::new();
    let mut out: Vec<Facet> = Vec::new();
    let mut subset: Vec<usize> = Vec::new();
    enumerate_subsets(vertices.len(), dim, 0, &mut subset, &mut |chosen| {
        let base = &vertices[chosen[0]];
        let diffs: Matrix = chosen[1..]
            .iter()
            .map(|&i| linalg::sub_vec(&vertices[i], base))
            .collect();
        // within the affine hull, the hyperplane through the subset is cut
        // out by normals vanishing on the diffs but not on the equations
        let mut rows = diffs;
        for eq in equations {
            rows.push(eq.normal.clone());
        }
        let rank = if rows.is_empty() { 0 } else { linalg::rank(&rows) };
        if rank != ambient - 1 {
            return; // subset not affinely independent within the hull
        }
        let normals = if rows.is_empty() {
            vec![linalg::unit_vec(ambient, 0)] // single point on a line
        } else {
            linalg::nullspace(&rows)
        };
        let [normal] = normals.as_slice() else {
            return;
        };
        let rhs = linalg::dot(normal, base);
        // orient so every vertex satisfies <=; reject cutting hyperplanes
        let mut pos = false;
        let mut neg = false;
        for v in vertices {
            let val = linalg::dot(normal, v);
            if val > rhs {
                pos = true;
            } else if val < rhs {
                neg = true;
            }
        }
        if pos && neg {
            return;
        }
        let (normal, rhs) = if pos {
            (linalg::scale_vec(&-Rat::one(), normal), -rhs)
        } else {
            (normal.clone(), rhs)
        };
        let (normal, rhs) = reduce_modulo_equations(&normal, &rhs, equations);
        if seen.insert((normal.clone(), rhs.clone())) {
            out.push(Facet { normal, rhs });
        }
    });
    out.sort();
    if dim >= 1 && out.len() < dim + 1 {
        return Err(Error::Internal(format!(
            "hull of dimension {dim} produced only {} facets",
            out.len()
        )));
    }
    Ok(out)
}

fn enumerate_subsets(
    n: usize,
    k: usize,
    start: usize,
    acc: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if acc.len() == k {
        visit(acc);
        return;
    }
    for i in start..n {
        acc.push(i);
        enumerate_subsets(n, k, i + 1, acc, visit);
        acc.pop();
    }
}

// ---------------------------------------------------------------------------
// Lattice points
// ---------------------------------------------------------------------------

/// Number of integer points in the dilate k . P, by exact enumeration over
/// the bounding box with halfspace tests.
pub fn lattice_count(polytope: &RationalPolytope, k: u32) -> Result<u64> {
    if k == 0 {
        return Err(Error::ShapeMismatch("scaling factor must be positive".into()));
    }
    if polytope.ambient == 0 {
        return Ok(1);
    }
    let factor = Rat::from_integer(BigInt::from(k));
    let mut lo = Vec::with_capacity(polytope.ambient);
    let mut hi = Vec::with_capacity(polytope.ambient);
    for c in 0..polytope.ambient {
        let coords: Vec<Rat> = polytope.vertices.iter().map(|v| &v[c] * &factor).collect();
        let min = coords.iter().min().expect("nonempty vertex set");
        let max = coords.iter().max().expect("nonempty vertex set");
        lo.push(min.ceil().to_integer());
        hi.push(max.floor().to_integer());
    }
    if lo.iter().zip(&hi).any(|(l, h)| l > h) {
        return Ok(0);
    }
    let mut count = 0u64;
    let mut point: Vec<BigInt> = lo.clone();
    loop {
        let candidate: Vector = point.iter().map(|x| Rat::from_integer(x.clone())).collect();
        let ok = polytope
            .equations
            .iter()
            .all(|eq| eq.eval(&candidate) == &eq.rhs * &factor)
            && polytope
                .facets
                .iter()
                .all(|f| f.eval(&candidate) <= &f.rhs * &factor);
        if ok {
            count += 1;
        }
        // odometer increment across the box
        let mut c = 0;
        loop {
            if c == polytope.ambient {
                return Ok(count);
            }
            if point[c] < hi[c] {
                point[c] += 1;
                break;
            }
            point[c] = lo[c].clone();
            c += 1;
        }
    }
}

// ---------------------------------------------------------------------------
// Volume
// ---------------------------------------------------------------------------

/// Star triangulation: simplices listed as tuples of ambient points, one
/// more point than the intrinsic dimension.
fn triangulate(points: &[Vector], ambient: usize) -> Result<Vec<Vec<Vector>>> {
    let p = RationalPolytope::from_points(ambient, points)?;
    if p.dim == 0 {
        return Ok(vec![vec![p.vertices[0].clone()]]);
    }
    let apex = &p.vertices[0];
    let mut out = Vec::new();
    for facet in &p.facets {
        if facet.eval(apex) == facet.rhs {
            continue; // apex on the facet: cone would be flat
        }
        let on_facet: Vec<Vector> = p
            .vertices
            .iter()
            .filter(|v| facet.eval(v) == facet.rhs)
            .cloned()
            .collect();
        for mut simplex in triangulate(&on_facet, ambient)? {
            simplex.push(apex.clone());
            out.push(simplex);
        }
    }
    Ok(out)
}

fn simplex_volume(simplex: &[Vector]) -> Result<Rat> {
    let d = simplex.len() - 1;
    let base = &simplex[0];
    let edges: Matrix = simplex[1..]
        .iter()
        .map(|v| linalg::sub_vec(v, base))
        .collect();
    let det = linalg::det(&edges)?;
    let mut dfact = Rat::one();
    for k in 2..=d as i64 {
        dfact *= Rat::from_integer(BigInt::from(k));
    }
    Ok(det.abs() / dfact)
}

/// Exact volume in the polytope's own dimension: Lebesgue measure for
/// full-dimensional input, 1 for a point, and for lower-dimensional input
/// only the axis-aligned case (constant coordinates project away) is
/// measured; anything else is refused as degenerate.
pub fn volume(polytope: &RationalPolytope) -> Result<Rat> {
    if polytope.dim == 0 {
        return Ok(Rat::one());
    }
    if polytope.is_full_dimensional() {
        let simplices = triangulate(&polytope.vertices, polytope.ambient)?;
        let mut total = Rat::zero();
        for s in &simplices {
            if s.len() != polytope.ambient + 1 {
                return Err(Error::Internal("triangulation produced a flat cell".into()));
            }
            total += simplex_volume(s)?;
        }
        return Ok(total);
    }
    // axis-aligned degeneracy: every equation pins a single coordinate
    let mut pinned = vec![false; polytope.ambient];
    for eq in &polytope.equations {
        let support: Vec<usize> = (0..polytope.ambient)
            .filter(|&c| !eq.normal[c].is_zero())
            .collect();
        let [c] = support.as_slice() else {
            return Err(Error::Degenerate(format!(
                "affine hull equation involves {} coordinates; volume is only \
                 defined here for full-dimensional or axis-aligned input",
                support.len()
            )));
        };
        pinned[*c] = true;
    }
    let kept: Vec<usize> = (0..polytope.ambient).filter(|&c| !pinned[c]).collect();
    let projected: Vec<Vector> = polytope
        .vertices
        .iter()
        .map(|v| kept.iter().map(|&c| v[c].clone()).collect())
        .collect();
    volume(&RationalPolytope::from_points(kept.len(), &projected)?)
}

// ---------------------------------------------------------------------------
// H-rep to V-rep
// ---------------------------------------------------------------------------

/// Vertices of the polytope cut out by the given facets and equations:
/// intersections of dim-subsets of facet hyperplanes with the equations
/// that satisfy every constraint. Used to cross-check descriptions.
pub fn vertices_from_hrep(
    ambient: usize,
    facets: &[Facet],
    equations: &[Facet],
) -> Result<Vec<Vector>> {
    let dim = ambient - equations.len();
    let mut seen: BTreeSet<Vector> = BTreeSet::new();
    if dim == 0 {
        let a: Matrix = equations.iter().map(|e| e.normal.clone()).collect();
        let b: Vector = equations.iter().map(|e| e.rhs.clone()).collect();
        if let Some(x) = linalg::solve(&a, &b) {
            seen.insert(x);
        }
        return Ok(seen.into_iter().collect());
    }
    let mut subset = Vec::new();
    enumerate_subsets(facets.len(), dim, 0, &mut subset, &mut |chosen| {
        let mut a: Matrix = equations.iter().map(|e| e.normal.clone()).collect();
        let mut b: Vector = equations.iter().map(|e| e.rhs.clone()).collect();
        for &i in chosen {
            a.push(facets[i].normal.clone());
            b.push(facets[i].rhs.clone());
        }
        if linalg::rank(&a) != ambient {
            return;
        }
        let Some(x) = linalg::solve(&a, &b) else {
            return;
        };
        let feasible = equations.iter().all(|eq| eq.eval(&x) == eq.rhs)
            && facets.iter().all(|f| f.eval(&x) <= f.rhs);
        if feasible {
            seen.insert(x);
        }
    });
    Ok(seen.into_iter().collect())
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::{rat, ratio};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn pts(raw: &[&[i64]]) -> Vec<Vector> {
        raw.iter().map(|p| p.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn segment_hull_is_exact() {
        let points = vec![
            vec![rat(0)],
            vec![rat(1)],
            vec![ratio(1, 2)],
            vec![rat(2)],
        ];
        let p = RationalPolytope::from_points(1, &points).unwrap();
        assert_eq!(p.dim, 1);
        assert_eq!(p.vertices, vec![vec![rat(0)], vec![rat(2)]]);
        assert_eq!(p.facets.len(), 2);
        assert_eq!(volume(&p).unwrap(), rat(2));
        assert_eq!(lattice_count(&p, 1).unwrap(), 3);
        assert_eq!(lattice_count(&p, 2).unwrap(), 5);
    }

    #[test]
    fn unit_simplex_volume_is_one_sixth() {
        let p = RationalPolytope::from_points(
            3,
            &pts(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
        )
        .unwrap();
        assert_eq!(p.dim, 3);
        assert_eq!(p.facets.len(), 4);
        assert_eq!(volume(&p).unwrap(), ratio(1, 6));
        assert_eq!(lattice_count(&p, 1).unwrap(), 4);
        assert_eq!(lattice_count(&p, 2).unwrap(), 10);
    }

    #[test]
    fn cube_volume_and_counts() {
        let corners: Vec<Vector> = (0..8)
            .map(|m| (0..3).map(|c| rat((m >> c) & 1)).collect())
            .collect();
        let p = RationalPolytope::from_points(3, &corners).unwrap();
        assert_eq!(p.vertices.len(), 8);
        assert_eq!(p.facets.len(), 6);
        assert_eq!(volume(&p).unwrap(), rat(1));
        assert_eq!(lattice_count(&p, 2).unwrap(), 27);
    }

    #[test]
    fn interior_points_are_not_vertices() {
        let mut points = pts(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2]]);
        points.push(vec![rat(1), rat(1)]);
        points.push(vec![rat(1), rat(0)]);
        let p = RationalPolytope::from_points(2, &points).unwrap();
        assert_eq!(p.vertices.len(), 4);
        assert_eq!(volume(&p).unwrap(), rat(4));
    }

    #[test]
    fn degenerate_triangle_counts_but_refuses_volume() {
        // hull of string values of the 3-dim module: a triangle inside R^3
        let p = RationalPolytope::from_points(3, &pts(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 1]]))
            .unwrap();
        assert_eq!(p.dim, 2);
        assert_eq!(p.equations.len(), 1);
        assert_eq!(lattice_count(&p, 1).unwrap(), 3);
        assert!(matches!(volume(&p), Err(Error::Degenerate(_))));
    }

    #[test]
    fn axis_aligned_slab_projects_for_volume() {
        let p = RationalPolytope::from_points(2, &pts(&[&[1, 0], &[1, 2]])).unwrap();
        assert_eq!(p.dim, 1);
        assert_eq!(volume(&p).unwrap(), rat(2));
        let point = RationalPolytope::from_points(2, &pts(&[&[3, 4]])).unwrap();
        assert_eq!(point.dim, 0);
        assert_eq!(volume(&point).unwrap(), rat(1));
        assert_eq!(lattice_count(&point, 1).unwrap(), 1);
        let half = RationalPolytope::from_points(1, &[vec![ratio(1, 2)]]).unwrap();
        assert_eq!(lattice_count(&half, 1).unwrap(), 0);
        assert_eq!(lattice_count(&half, 2).unwrap(), 1);
    }

    #[test]
    fn collinear_points_reduce_to_a_segment() {
        let points: Vec<Vector> = (0..6).map(|i| vec![rat(i), rat(2 * i)]).collect();
        let p = RationalPolytope::from_points(2, &points).unwrap();
        assert_eq!(p.dim, 1);
        assert_eq!(p.vertices.len(), 2);
        assert_eq!(p.equations.len(), 1);
        assert_eq!(p.equations[0].normal, vec![rat(2), rat(-1)]);
        assert_eq!(p.equations[0].rhs, rat(0));
        assert_eq!(lattice_count(&p, 1).unwrap(), 6);
    }

    #[test]
    fn hrep_roundtrip_recovers_vertices() {
        for points in [
            pts(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
            pts(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 1]]),
            pts(&[&[0, 0], &[3, 0], &[0, 2], &[3, 2]]),
        ] {
            let ambient = points[0].len();
            let p = RationalPolytope::from_points(ambient, &points).unwrap();
            let back = vertices_from_hrep(ambient, &p.facets, &p.equations).unwrap();
            assert_eq!(back, p.vertices);
        }
    }

    #[test]
    fn scaling_commutes_with_hulls() {
        let p = RationalPolytope::from_points(2, &pts(&[&[0, 0], &[1, 0], &[1, 1]])).unwrap();
        let doubled = p.scale(2).unwrap();
        let direct =
            RationalPolytope::from_points(2, &pts(&[&[0, 0], &[2, 0], &[2, 2]])).unwrap();
        assert_eq!(doubled, direct);
        assert_eq!(volume(&doubled).unwrap(), rat(2));
    }

    #[test]
    fn hull_membership_matches_halfspace_test() {
        let points = pts(&[&[0, 0], &[4, 0], &[0, 4]]);
        let p = RationalPolytope::from_points(2, &points).unwrap();
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..40 {
            let x = vec![
                ratio(rng.gen_range(-8..=8), 2),
                ratio(rng.gen_range(-8..=8), 2),
            ];
            assert_eq!(in_hull(&points, &x), p.contains(&x));
        }
        assert!(p.contains(&[rat(1), rat(1)]));
        assert!(!p.contains(&[rat(3), rat(3)]));
        assert!(p.contains(&[rat(0), rat(4)]));
    }

    #[test]
    fn every_input_point_lies_in_the_hull() {
        let mut rng = StdRng::seed_from_u64(11);
        let points: Vec<Vector> = (0..12)
            .map(|_| (0..3).map(|_| rat(rng.gen_range(-3..=3))).collect())
            .collect();
        let p = RationalPolytope::from_points(3, &points).unwrap();
        for q in &points {
            assert!(p.contains(q));
        }
        for v in &p.vertices {
            let others: Vec<Vector> =
                points.iter().filter(|q| *q != v).cloned().collect();
            assert!(!in_hull(&others, v));
        }
    }

    #[test]
    fn empty_input_is_rejected() {
        assert!(matches!(
            RationalPolytope::from_points(2, &[]),
            Err(Error::Degenerate(_))
        ));
    }
}
