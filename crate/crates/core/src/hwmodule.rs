//! Exact highest-weight modules built from Chevalley generators.
//!
//! The defining representations are written down directly; everything else
//! is carved out of tensor products of fundamental representations by
//! closing the highest weight vector under the lowering operators, with
//! exact rational row reduction deciding membership.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, Span, SparseOp, Vector};
use crate::ratio::Rat;
use crate::rootdata::{Family, RootSystemSpec, Weight};

/// Default cap on module dimension; guards accidental blow-ups.
pub const DEFAULT_DIM_CAP: u64 = 200;

/// Functional on a module, as its values on the module basis.
pub type DualVector = Vector;

// ---------------------------------------------------------------------------
// Ambient representations (sparse, possibly reducible)
// ---------------------------------------------------------------------------

/// A representation carried by explicit sparse raising/lowering operators.
/// Basis vectors are weight vectors; `weights` lists their weights in
/// fundamental coordinates.
pub struct AmbientRep {
    pub dim: usize,
    pub e: Vec<SparseOp>,
    pub f: Vec<SparseOp>,
    pub weights: Vec<Weight>,
    pub hw_index: usize,
}

/// The defining representation: `C^{r+1}` for `A_r`, `C^4` for `C_2`.
pub fn defining_rep(spec: &RootSystemSpec) -> AmbientRep {
    let rank = spec.rank;
    match spec.family {
        Family::A => {
            let dim = rank + 1;
            let mut e = Vec::with_capacity(rank);
            let mut f = Vec::with_capacity(rank);
            for a in 0..rank {
                let mut eop = SparseOp::zero(dim);
                let mut fop = SparseOp::zero(dim);
                // E_i: v_{i+1} -> v_i, F_i: v_i -> v_{i+1} (1-based math).
                eop.cols[a + 1].push((a, Rat::one()));
                fop.cols[a].push((a + 1, Rat::one()));
                e.push(eop);
                f.push(fop);
            }
            let weights = (0..dim)
                .map(|j| {
                    (0..rank)
                        .map(|a| {
                            let mut w = 0i64;
                            if j == a {
                                w += 1;
                            }
                            if j == a + 1 {
                                w -= 1;
                            }
                            w
                        })
                        .collect()
                })
                .collect();
            AmbientRep { dim, e, f, weights, hw_index: 0 }
        }
        Family::C => {
            // Symplectic form antidiag(1, 1, -1, -1) on basis e1..e4.
            let dim = 4;
            let mut e1 = SparseOp::zero(dim);
            let mut f1 = SparseOp::zero(dim);
            e1.cols[1].push((0, Rat::one()));
            e1.cols[3].push((2, -Rat::one()));
            f1.cols[0].push((1, Rat::one()));
            f1.cols[2].push((3, -Rat::one()));
            let mut e2 = SparseOp::zero(dim);
            let mut f2 = SparseOp::zero(dim);
            e2.cols[2].push((1, Rat::one()));
            f2.cols[1].push((2, Rat::one()));
            let weights = vec![vec![1, 0], vec![-1, 1], vec![1, -1], vec![-1, 0]];
            AmbientRep { dim, e: vec![e1, e2], f: vec![f1, f2], weights, hw_index: 0 }
        }
    }
}

/// Exterior power of an ambient representation, acting by the Leibniz rule
/// on sorted index tuples.
pub fn exterior_power(rep: &AmbientRep, k: usize, rank: usize) -> AmbientRep {
    let subsets = sorted_subsets(rep.dim, k);
    let index_of = |s: &[usize]| -> usize {
        subsets.binary_search_by(|probe| probe.as_slice().cmp(s)).expect("subset indexed")
    };
    let dim = subsets.len();
    let apply_op = |op: &SparseOp| -> SparseOp {
        let mut out = SparseOp::zero(dim);
        for (src, subset) in subsets.iter().enumerate() {
            for (pos, &factor) in subset.iter().enumerate() {
                for (target, c) in &op.cols[factor] {
                    if subset.binary_search(target).is_ok() && *target != factor {
                        continue; // repeated factor wedges to zero
                    }
                    let mut raw: Vec<usize> = subset.clone();
                    raw[pos] = *target;
                    let (sorted, sign) = sort_with_sign(raw);
                    let dst = index_of(&sorted);
                    let coeff = if sign { -c.clone() } else { c.clone() };
                    push_entry(&mut out.cols[src], dst, coeff);
                }
            }
        }
        out
    };
    let e = rep.e.iter().map(apply_op).collect();
    let f = rep.f.iter().map(apply_op).collect();
    let weights = subsets
        .iter()
        .map(|s| {
            let mut w = vec![0i64; rank];
            for &j in s {
                for (c, x) in w.iter_mut().zip(&rep.weights[j]) {
                    *c += x;
                }
            }
            w
        })
        .collect();
    // Highest vector: wedge of the first k basis vectors. Correct for the
    // defining representations used here, where the basis is ordered by
    // descending weight along the lowering chain.
    AmbientRep { dim, e, f, weights, hw_index: 0 }
}

fn sorted_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn sort_with_sign(mut v: Vec<usize>) -> (Vec<usize>, bool) {
    let mut swaps = 0;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            swaps += 1;
            j -= 1;
        }
    }
    (v, swaps % 2 == 1)
}

fn push_entry(col: &mut Vec<(usize, Rat)>, dst: usize, coeff: Rat) {
    if coeff.is_zero() {
        return;
    }
    for entry in col.iter_mut() {
        if entry.0 == dst {
            entry.1 += coeff;
            if entry.1.is_zero() {
                let keep: Vec<(usize, Rat)> =
                    col.iter().filter(|(_, c)| !c.is_zero()).cloned().collect();
                *col = keep;
            }
            return;
        }
    }
    col.push((dst, coeff));
}

/// Tensor product acting by `X (x) 1 + 1 (x) X`.
pub fn tensor(a: &AmbientRep, b: &AmbientRep, rank: usize) -> AmbientRep {
    let dim = a.dim * b.dim;
    let pair = |i: usize, j: usize| i * b.dim + j;
    let combine = |xa: &SparseOp, xb: &SparseOp| -> SparseOp {
        let mut out = SparseOp::zero(dim);
        for i in 0..a.dim {
            for j in 0..b.dim {
                let src = pair(i, j);
                for (ti, c) in &xa.cols[i] {
                    push_entry(&mut out.cols[src], pair(*ti, j), c.clone());
                }
                for (tj, c) in &xb.cols[j] {
                    push_entry(&mut out.cols[src], pair(i, *tj), c.clone());
                }
            }
        }
        out
    };
    let e = (0..rank).map(|i| combine(&a.e[i], &b.e[i])).collect();
    let f = (0..rank).map(|i| combine(&a.f[i], &b.f[i])).collect();
    let mut weights = Vec::with_capacity(dim);
    for i in 0..a.dim {
        for j in 0..b.dim {
            let w = a.weights[i]
                .iter()
                .zip(&b.weights[j])
                .map(|(x, y)| x + y)
                .collect();
            weights.push(w);
        }
    }
    AmbientRep {
        dim,
        e,
        f,
        weights,
        hw_index: pair(a.hw_index, b.hw_index),
    }
}

/// Restricts an ambient representation to an invariant subspace with the
/// given basis; operator coordinates are solved exactly.
pub fn subrep(rep: &AmbientRep, basis: &[Vector], hw_index: usize, rank: usize) -> Result<AmbientRep> {
    let dim = basis.len();
    let mut span = Span::new(rep.dim);
    for b in basis {
        if !span.insert(b) {
            return Err(Error::Internal("subrep basis is dependent".into()));
        }
    }
    let restrict = |op: &SparseOp| -> Result<SparseOp> {
        let mut out = SparseOp::zero(dim);
        for (j, b) in basis.iter().enumerate() {
            let img = op.apply(b);
            let coords = span
                .coords(&img)
                .ok_or_else(|| Error::Internal("subrep is not invariant".into()))?;
            for (i, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    out.cols[j].push((i, c));
                }
            }
        }
        Ok(out)
    };
    let e = (0..rank).map(|i| restrict(&rep.e[i])).collect::<Result<_>>()?;
    let f = (0..rank).map(|i| restrict(&rep.f[i])).collect::<Result<_>>()?;
    let mut weights = Vec::with_capacity(dim);
    for b in basis {
        weights.push(vector_weight(rep, b)?);
    }
    Ok(AmbientRep { dim, e, f, weights, hw_index })
}

/// Weight of a weight-homogeneous vector, from its support.
fn vector_weight(rep: &AmbientRep, v: &Vector) -> Result<Weight> {
    let mut weight: Option<Weight> = None;
    for (j, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        match &weight {
            None => weight = Some(rep.weights[j].clone()),
            Some(w) if *w == rep.weights[j] => {}
            Some(w) => {
                return Err(Error::Internal(format!(
                    "vector mixes weights {w:?} and {:?}",
                    rep.weights[j]
                )))
            }
        }
    }
    weight.ok_or_else(|| Error::Internal("zero vector has no weight".into()))
}

/// Fundamental representation `V_{omega_k}` as an ambient rep.
pub fn fundamental_rep(spec: &RootSystemSpec, k: usize) -> Result<AmbientRep> {
    if k == 0 || k > spec.rank {
        return Err(Error::InvalidWeight(format!(
            "fundamental index {k} out of range 1..={}",
            spec.rank
        )));
    }
    let def = defining_rep(spec);
    match spec.family {
        Family::A => Ok(exterior_power(&def, k, spec.rank)),
        Family::C => {
            if k == 1 {
                Ok(def)
            } else {
                // Primitive part of Lambda^2 C^4: kernel of the symplectic
                // contraction e_i ^ e_j -> omega(e_i, e_j).
                let wedge = exterior_power(&def, 2, spec.rank);
                // Subset order: {0,1},{0,2},{0,3},{1,2},{1,3},{2,3};
                // omega pairs {0,3} and {1,2} with coefficient 1.
                let mut contraction = vec![Rat::zero(); 6];
                contraction[2] = Rat::one();
                contraction[3] = Rat::one();
                let mut basis: Vec<Vector> = Vec::new();
                for idx in [0usize, 1, 4, 5] {
                    basis.push(linalg::unit_vec(6, idx));
                }
                let mut mixed = linalg::zero_vec(6);
                mixed[2] = Rat::one();
                mixed[3] = -Rat::one();
                basis.push(mixed);
                // Sanity: basis really is the kernel of the contraction.
                for b in &basis {
                    debug_assert!(linalg::dot(&contraction, b).is_zero());
                }
                subrep(&wedge, &basis, 0, spec.rank)
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Highest-weight modules (dense, irreducible)
// ---------------------------------------------------------------------------

/// An irreducible highest-weight module with exact dense operators.
///
/// Basis vector 0 is the highest weight vector; `op_f[i]` and `op_e[i]`
/// hold the matrices of `F_{i+1}` and `E_{i+1}` (columns act on basis
/// indices).
#[derive(Debug, Clone)]
pub struct HWModule {
    pub spec: RootSystemSpec,
    pub highest_weight: Weight,
    pub dim: usize,
    pub op_e: Vec<Matrix>,
    pub op_f: Vec<Matrix>,
    pub basis_weights: Vec<Weight>,
    pub hw_index: usize,
}

/// Builds `V_lambda` with the default dimension cap.
pub fn build_hw_module(spec: &RootSystemSpec, lambda: &[i64]) -> Result<HWModule> {
    build_hw_module_capped(spec, lambda, DEFAULT_DIM_CAP)
}

/// Builds `V_lambda`, refusing when the Weyl dimension exceeds `cap`.
pub fn build_hw_module_capped(spec: &RootSystemSpec, lambda: &[i64], cap: u64) -> Result<HWModule> {
    spec.check_dominant(lambda)?;
    let need = spec.weyl_dim(lambda)?;
    if need > cap {
        return Err(Error::DimensionCap { need, cap });
    }
    let ambient = ambient_for(spec, lambda, cap)?;
    close_highest_vector(spec, lambda, &ambient, need)
}

/// Ambient representation containing `V_lambda` as the submodule generated
/// by its highest vector: built by tensoring one fundamental factor at a
/// time so intermediate spaces stay small.
fn ambient_for(spec: &RootSystemSpec, lambda: &[i64], cap: u64) -> Result<AmbientRep> {
    if lambda.iter().all(|&x| x == 0) {
        let rank = spec.rank;
        return Ok(AmbientRep {
            dim: 1,
            e: vec![SparseOp::zero(1); rank],
            f: vec![SparseOp::zero(1); rank],
            weights: vec![vec![0; rank]],
            hw_index: 0,
        });
    }
    let k = 1 + lambda
        .iter()
        .position(|&x| x > 0)
        .expect("nonzero dominant weight");
    let mut rest = lambda.to_vec();
    rest[k - 1] -= 1;
    let fund = fundamental_rep(spec, k)?;
    if rest.iter().all(|&x| x == 0) {
        return Ok(fund);
    }
    // Collapse the recursive factor to its irreducible module first; this
    // keeps the ambient dimension at (dim V_rest) * (dim fundamental).
    let inner = build_hw_module_capped(spec, &rest, cap)?;
    let inner_ambient = inner.as_ambient();
    Ok(tensor(&inner_ambient, &fund, spec.rank))
}

/// Closes the highest vector under all lowering operators.
fn close_highest_vector(
    spec: &RootSystemSpec,
    lambda: &[i64],
    ambient: &AmbientRep,
    expect_dim: u64,
) -> Result<HWModule> {
    let rank = spec.rank;
    let mut span = Span::new(ambient.dim);
    let mut basis: Vec<Vector> = Vec::new();
    let mut weights: Vec<Weight> = Vec::new();
    let hw = linalg::unit_vec(ambient.dim, ambient.hw_index);
    span.insert(&hw);
    basis.push(hw);
    weights.push(lambda.to_vec());
    let roots: Vec<Weight> = (1..=rank)
        .map(|i| spec.simple_root(i).expect("index in range"))
        .collect();
    let mut next = 0;
    while next < basis.len() {
        for i in 0..rank {
            let img = ambient.f[i].apply(&basis[next]);
            if linalg::is_zero_vec(&img) {
                continue;
            }
            if span.insert(&img) {
                let w = weights[next]
                    .iter()
                    .zip(&roots[i])
                    .map(|(x, a)| x - a)
                    .collect();
                basis.push(img);
                weights.push(w);
            }
        }
        next += 1;
    }
    if basis.len() as u64 != expect_dim {
        return Err(Error::Internal(format!(
            "closure found dimension {}, Weyl formula says {expect_dim}",
            basis.len()
        )));
    }
    let dim = basis.len();
    let mut op_e = vec![vec![linalg::zero_vec(dim); dim]; rank];
    let mut op_f = vec![vec![linalg::zero_vec(dim); dim]; rank];
    for (j, b) in basis.iter().enumerate() {
        for i in 0..rank {
            let fimg = ambient.f[i].apply(b);
            let fc = span
                .coords(&fimg)
                .ok_or_else(|| Error::Internal("lowering image left the span".into()))?;
            let eimg = ambient.e[i].apply(b);
            let ec = span
                .coords(&eimg)
                .ok_or_else(|| Error::Internal("raising image left the span".into()))?;
            for r in 0..dim {
                op_f[i][r][j] = fc[r].clone();
                op_e[i][r][j] = ec[r].clone();
            }
        }
    }
    Ok(HWModule {
        spec: *spec,
        highest_weight: lambda.to_vec(),
        dim,
        op_e,
        op_f,
        basis_weights: weights,
        hw_index: 0,
    })
}

impl HWModule {
    /// Repackages the dense module as an ambient rep for further tensoring.
    fn as_ambient(&self) -> AmbientRep {
        let to_sparse = |m: &Matrix| -> SparseOp {
            let mut op = SparseOp::zero(self.dim);
            for (r, row) in m.iter().enumerate() {
                for (c, x) in row.iter().enumerate() {
                    if !x.is_zero() {
                        op.cols[c].push((r, x.clone()));
                    }
                }
            }
            op
        };
        AmbientRep {
            dim: self.dim,
            e: self.op_e.iter().map(to_sparse).collect(),
            f: self.op_f.iter().map(to_sparse).collect(),
            weights: self.basis_weights.clone(),
            hw_index: self.hw_index,
        }
    }

    /// Applies `F_i` (1-based) to a module vector.
    pub fn apply_f(&self, i: usize, v: &[Rat]) -> Result<Vector> {
        self.check_op_index(i)?;
        Ok(linalg::mat_vec(&self.op_f[i - 1], v))
    }

    /// Applies `E_i` (1-based) to a module vector.
    pub fn apply_e(&self, i: usize, v: &[Rat]) -> Result<Vector> {
        self.check_op_index(i)?;
        Ok(linalg::mat_vec(&self.op_e[i - 1], v))
    }

    fn check_op_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.spec.rank {
            return Err(Error::InvalidWord(format!(
                "operator index {i} out of range 1..={}",
                self.spec.rank
            )));
        }
        Ok(())
    }

    /// Dual action of `F_i` on a functional: precomposition, i.e. the
    /// plain transpose with no sign.
    pub fn dual_action_f(&self, i: usize, sigma: &[Rat]) -> Result<DualVector> {
        self.check_op_index(i)?;
        if sigma.len() != self.dim {
            return Err(Error::ShapeMismatch(format!(
                "functional has {} coordinates, module dimension is {}",
                sigma.len(),
                self.dim
            )));
        }
        let m = &self.op_f[i - 1];
        let mut out = linalg::zero_vec(self.dim);
        for (r, s) in sigma.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            for (c, entry) in m[r].iter().enumerate() {
                if !entry.is_zero() {
                    out[c] += entry * s;
                }
            }
        }
        Ok(out)
    }

    /// The functional dual to basis vector `b`.
    pub fn dual_basis_vector(&self, b: usize) -> DualVector {
        linalg::unit_vec(self.dim, b)
    }

    /// The full dual basis.
    pub fn dual_basis(&self) -> Vec<DualVector> {
        (0..self.dim).map(|b| self.dual_basis_vector(b)).collect()
    }

    /// The distinguished functional dual to the highest weight vector.
    pub fn tau(&self) -> DualVector {
        self.dual_basis_vector(self.hw_index)
    }

    /// Support weight of a functional: the common weight of the basis
    /// vectors it pairs nontrivially with, if homogeneous.
    pub fn support_weight(&self, sigma: &[Rat]) -> Option<Weight> {
        let mut weight: Option<Weight> = None;
        for (j, c) in sigma.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match &weight {
                None => weight = Some(self.basis_weights[j].clone()),
                Some(w) if *w == self.basis_weights[j] => {}
                Some(_) => return None,
            }
        }
        weight
    }

    /// Diagonal of `H_i` in this basis, from the stored weights.
    pub fn h_diagonal(&self, i: usize) -> Result<Vector> {
        self.check_op_index(i)?;
        Ok(self
            .basis_weights
            .iter()
            .map(|w| Rat::from_integer(w[i - 1].into()))
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::mat_mul;
    use crate::ratio::rat;

    fn a(rank: usize) -> RootSystemSpec {
        RootSystemSpec::new(Family::A, rank).unwrap()
    }

    fn c2() -> RootSystemSpec {
        RootSystemSpec::new(Family::C, 2).unwrap()
    }

    fn check_chevalley_relations(m: &HWModule) {
        let rank = m.spec.rank;
        let cartan = m.spec.cartan_matrix();
        for i in 0..rank {
            // [E_i, F_i] = H_i as a diagonal matrix of weight pairings.
            let ef = mat_mul(&m.op_e[i], &m.op_f[i]);
            let fe = mat_mul(&m.op_f[i], &m.op_e[i]);
            for r in 0..m.dim {
                for c in 0..m.dim {
                    let expected = if r == c {
                        rat(m.basis_weights[r][i])
                    } else {
                        rat(0)
                    };
                    assert_eq!(&ef[r][c] - &fe[r][c], expected, "[E,F] at ({r},{c})");
                }
            }
            for j in 0..rank {
                if i == j {
                    continue;
                }
                // [E_i, F_j] = 0 for distinct indices.
                let ef = mat_mul(&m.op_e[i], &m.op_f[j]);
                let fe = mat_mul(&m.op_f[j], &m.op_e[i]);
                assert_eq!(ef, fe, "[E_{i},F_{j}] must vanish");
            }
            // Operators shift weights by exactly +-alpha_i.
            let alpha: Vec<i64> = (0..rank).map(|r| cartan[r][i]).collect();
            for c in 0..m.dim {
                for r in 0..m.dim {
                    if !m.op_f[i][r][c].is_zero() {
                        let expect: Weight = m.basis_weights[c]
                            .iter()
                            .zip(&alpha)
                            .map(|(x, a)| x - a)
                            .collect();
                        assert_eq!(m.basis_weights[r], expect);
                    }
                    if !m.op_e[i][r][c].is_zero() {
                        let expect: Weight = m.basis_weights[c]
                            .iter()
                            .zip(&alpha)
                            .map(|(x, a)| x + a)
                            .collect();
                        assert_eq!(m.basis_weights[r], expect);
                    }
                }
            }
        }
        // Highest vector is annihilated by every raising operator.
        for i in 1..=rank {
            let img = m
                .apply_e(i, &linalg::unit_vec(m.dim, m.hw_index))
                .unwrap();
            assert!(linalg::is_zero_vec(&img));
        }
    }

    #[test]
    fn a1_symmetric_powers() {
        let spec = a(1);
        for mdeg in 0..=5i64 {
            let m = build_hw_module(&spec, &[mdeg]).unwrap();
            assert_eq!(m.dim, (mdeg + 1) as usize);
            check_chevalley_relations(&m);
        }
    }

    #[test]
    fn a2_adjoint_module_has_a_double_weight_zero() {
        let m = build_hw_module(&a(2), &[1, 1]).unwrap();
        assert_eq!(m.dim, 8);
        check_chevalley_relations(&m);
        let zero_mult = m
            .basis_weights
            .iter()
            .filter(|w| w.iter().all(|&x| x == 0))
            .count();
        assert_eq!(zero_mult, 2);
    }

    #[test]
    fn a2_fundamental_weights() {
        let m = build_hw_module(&a(2), &[0, 1]).unwrap();
        assert_eq!(m.dim, 3);
        let mut ws = m.basis_weights.clone();
        ws.sort();
        assert_eq!(ws, vec![vec![-1, 0], vec![0, 1], vec![1, -1]]);
        check_chevalley_relations(&m);
    }

    #[test]
    fn a3_six_dimensional_fundamental() {
        let m = build_hw_module(&a(3), &[0, 1, 0]).unwrap();
        assert_eq!(m.dim, 6);
        check_chevalley_relations(&m);
    }

    #[test]
    fn c2_defining_and_short_fundamental() {
        let m1 = build_hw_module(&c2(), &[1, 0]).unwrap();
        assert_eq!(m1.dim, 4);
        check_chevalley_relations(&m1);

        let m2 = build_hw_module(&c2(), &[0, 1]).unwrap();
        assert_eq!(m2.dim, 5);
        check_chevalley_relations(&m2);
        let mut ws = m2.basis_weights.clone();
        ws.sort();
        assert_eq!(
            ws,
            vec![
                vec![-2, 1],
                vec![0, -1],
                vec![0, 0],
                vec![0, 1],
                vec![2, -1],
            ]
        );
    }

    #[test]
    fn c2_sixteen_dimensional_module() {
        let m = build_hw_module(&c2(), &[1, 1]).unwrap();
        assert_eq!(m.dim, 16);
        check_chevalley_relations(&m);
    }

    #[test]
    fn dimension_cap_is_enforced() {
        let err = build_hw_module(&a(2), &[6, 6]).unwrap_err();
        match err {
            Error::DimensionCap { need, cap } => {
                assert_eq!(need, 343);
                assert_eq!(cap, DEFAULT_DIM_CAP);
            }
            other => panic!("expected DimensionCap, got {other:?}"),
        }
        assert!(build_hw_module_capped(&a(2), &[6, 6], 400).is_ok());
    }

    #[test]
    fn dual_action_is_the_transpose() {
        let m = build_hw_module(&a(2), &[1, 0]).unwrap();
        // (F_i . sigma)(v) = sigma(F_i v) for all basis sigma, v.
        for i in 1..=2 {
            for b in 0..m.dim {
                let sigma = m.dual_basis_vector(b);
                let fs = m.dual_action_f(i, &sigma).unwrap();
                for v in 0..m.dim {
                    let fv = m.apply_f(i, &linalg::unit_vec(m.dim, v)).unwrap();
                    assert_eq!(fs[v], fv[b]);
                }
            }
        }
    }

    #[test]
    fn hw_functional_is_killed_by_dual_lowering() {
        let m = build_hw_module(&c2(), &[0, 1]).unwrap();
        for i in 1..=2 {
            let hit = m.dual_action_f(i, &m.tau()).unwrap();
            assert!(linalg::is_zero_vec(&hit));
        }
    }

    #[test]
    fn support_weight_tracks_homogeneity() {
        let m = build_hw_module(&a(2), &[1, 1]).unwrap();
        for b in 0..m.dim {
            let sigma = m.dual_basis_vector(b);
            assert_eq!(m.support_weight(&sigma), Some(m.basis_weights[b].clone()));
        }
        // Mix two distinct weights: no support weight.
        let mut mixed = m.dual_basis_vector(0);
        mixed[1] = rat(1);
        assert_eq!(m.support_weight(&mixed), None);
    }

    #[test]
    fn h_diagonal_matches_weights() {
        let m = build_hw_module(&a(1), &[3]).unwrap();
        let h = m.h_diagonal(1).unwrap();
        let expected: Vec<Rat> = m.basis_weights.iter().map(|w| rat(w[0])).collect();
        assert_eq!(h, expected);
        // Cross-check against [E, F] applied to each basis vector.
        for b in 0..m.dim {
            let v = linalg::unit_vec(m.dim, b);
            let ef = m.apply_e(1, &m.apply_f(1, &v).unwrap()).unwrap();
            let fe = m.apply_f(1, &m.apply_e(1, &v).unwrap()).unwrap();
            let comm = linalg::sub_vec(&ef, &fe);
            let expect = linalg::scale_vec(&h[b], &v);
            assert_eq!(comm, expect);
        }
    }
}
