//! String parametrization of dual functionals along a reduced word, value
//! sets extracted by leaf reduction, and a type-A tableaux crystal that
//! serves as an independent combinatorial oracle.
//!
//! The string parameters of a nonzero functional are the greedy maximal
//! application counts of the transposed lowering operators taken along a
//! reduced word for the longest Weyl element. The map has one-dimensional
//! leaves: two independent functionals with equal parameters can always be
//! separated by subtracting a single scalar multiple, which strictly lowers
//! the parameter tuple of the later one. Reducing the full dual basis this
//! way yields exactly `dim V_lambda` distinct tuples.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hwmodule::{DualVector, HWModule};
use crate::linalg::{self, Span};
use crate::poly_val::{leaf_reduce, ValVector};
use crate::rootdata::{Family, RootSystemSpec, Weight, WeylWord};

// ---------------------------------------------------------------------------
// String parameters
// ---------------------------------------------------------------------------

/// A tuple (a_1, ..., a_N) of greedy application counts, compared
/// lexicographically left to right.
pub type StringParams = Vec<u32>;

/// The set of string parameters realized by a module's dual basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueSet {
    pub lambda: Weight,
    pub word: WeylWord,
    pub points: BTreeSet<StringParams>,
}

/// A leaf-reduced dual basis: vectors with pairwise distinct string
/// parameters, spanning the same space as the original dual basis.
#[derive(Debug, Clone)]
pub struct AdaptedDualBasis {
    pub word: WeylWord,
    pub vectors: Vec<DualVector>,
    pub params: Vec<StringParams>,
}

/// Largest cap accepted by `string_cone_sample`.
pub const STRING_CONE_DEGREE_CAP: i64 = 5;

pub(crate) fn check_reduced_longest(spec: &RootSystemSpec, word: &[usize]) -> Result<()> {
    spec.check_word(word)?;
    if word.len() != spec.num_positive_roots() || !spec.is_reduced(word)? {
        return Err(Error::InvalidWord(format!(
            "expected a reduced word of length {} for the longest element",
            spec.num_positive_roots()
        )));
    }
    Ok(())
}

/// Applies the transposed lowering operator for `i` as often as possible,
/// returning the count and the last nonzero iterate.
fn max_dual_power(module: &HWModule, i: usize, sigma: &DualVector) -> Result<(u32, DualVector)> {
    let mut count = 0u32;
    let mut current = sigma.clone();
    loop {
        let next = module.dual_action_f(i, &current)?;
        if linalg::is_zero_vec(&next) {
            return Ok((count, current));
        }
        count += 1;
        current = next;
        if count as usize > 4 * module.dim {
            return Err(Error::Internal(
                "dual lowering failed to become nilpotent".into(),
            ));
        }
    }
}

/// String parameters of a nonzero functional along a reduced word for the
/// longest element: a_k is the maximal power of the transposed lowering
/// operator for index i_k that keeps the running functional nonzero.
pub fn string_params(
    module: &HWModule,
    word: &[usize],
    sigma: &DualVector,
) -> Result<StringParams> {
    Ok(string_params_with_terminal(module, word, sigma)?.0)
}

/// String parameters together with the terminal surviving functional.
///
/// The terminal functional is always supported in the highest weight: the
/// greedy sweep along a full reduced word climbs every string to its top.
pub fn string_params_with_terminal(
    module: &HWModule,
    word: &[usize],
    sigma: &DualVector,
) -> Result<(StringParams, DualVector)> {
    check_reduced_longest(&module.spec, word)?;
    if sigma.len() != module.dim {
        return Err(Error::ShapeMismatch(format!(
            "functional has {} coordinates, module dimension is {}",
            sigma.len(),
            module.dim
        )));
    }
    if linalg::is_zero_vec(sigma) {
        return Err(Error::ZeroInput);
    }
    let mut params = Vec::with_capacity(word.len());
    let mut current = sigma.clone();
    for &i in word {
        let (count, survivor) = max_dual_power(module, i, &current)?;
        params.push(count);
        current = survivor;
    }
    Ok((params, current))
}

/// Applies the fixed operator prescribed by `params` along `word`:
/// the a_1-th transposed power for i_1, then the a_2-th for i_2, and so on.
/// Unlike the greedy sweep this can return zero.
pub fn apply_string_powers(
    module: &HWModule,
    word: &[usize],
    params: &[u32],
    sigma: &DualVector,
) -> Result<DualVector> {
    if params.len() != word.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} parameters for a word of length {}",
            params.len(),
            word.len()
        )));
    }
    let mut current = sigma.clone();
    for (&i, &a) in word.iter().zip(params) {
        for _ in 0..a {
            current = module.dual_action_f(i, &current)?;
            if linalg::is_zero_vec(&current) {
                return Ok(current);
            }
        }
    }
    Ok(current)
}

fn params_as_value(params: &[u32]) -> ValVector {
    params.iter().map(|&a| a as i64).collect()
}

/// Leaf-reduces the full dual basis until all string parameters are
/// distinct. Collisions are eliminated by subtracting the scalar multiple
/// of the earlier vector that kills the terminal functional of the later
/// one; this strictly lowers the later vector's parameter tuple.
pub fn adapted_dual_basis(module: &HWModule, word: &[usize]) -> Result<AdaptedDualBasis> {
    check_reduced_longest(&module.spec, word)?;
    let value = |sigma: &DualVector| -> Result<ValVector> {
        Ok(params_as_value(&string_params(module, word, sigma)?))
    };
    let eliminate = |keep: &DualVector, later: &DualVector| -> Result<DualVector> {
        let (p_keep, t_keep) = string_params_with_terminal(module, word, keep)?;
        let (p_later, t_later) = string_params_with_terminal(module, word, later)?;
        if p_keep != p_later {
            return Err(Error::Internal(
                "eliminator called on functionals with distinct parameters".into(),
            ));
        }
        // One-dimensional leaves force the terminal functionals parallel.
        let pivot = t_keep
            .iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| Error::Internal("terminal functional is zero".into()))?;
        let c = &t_later[pivot] / &t_keep[pivot];
        for (a, b) in t_later.iter().zip(&t_keep) {
            if *a != &c * b {
                return Err(Error::LeafSeparation(format!(
                    "terminal functionals of colliding parameters {:?} are not parallel",
                    p_keep
                )));
            }
        }
        Ok(linalg::sub_vec(later, &linalg::scale_vec(&c, keep)))
    };
    let (vectors, values) = leaf_reduce(&module.dual_basis(), value, eliminate)?;
    let params = values
        .iter()
        .map(|v| v.iter().map(|&x| x as u32).collect())
        .collect();
    Ok(AdaptedDualBasis { word: word.to_vec(), vectors, params })
}

/// The value set S_lambda: all string parameter tuples realized on the dual
/// module, one per basis vector after leaf reduction.
pub fn value_set(module: &HWModule, word: &[usize]) -> Result<ValueSet> {
    let adapted = adapted_dual_basis(module, word)?;
    let points: BTreeSet<StringParams> = adapted.params.iter().cloned().collect();
    if points.len() != module.dim {
        return Err(Error::LeafSeparation(format!(
            "{} distinct parameter tuples on a module of dimension {}",
            points.len(),
            module.dim
        )));
    }
    Ok(ValueSet {
        lambda: module.highest_weight.clone(),
        word: word.to_vec(),
        points,
    })
}

/// Samples the graded family {(lambda, a) : a in S_lambda} over all dominant
/// weights with coordinate sum at most `degree_cap`. The union is a sample
/// of the lattice points of the string cone fibered over the weight lattice.
pub fn string_cone_sample(
    spec: &RootSystemSpec,
    word: &[usize],
    degree_cap: i64,
) -> Result<BTreeSet<(Weight, StringParams)>> {
    if !(0..=STRING_CONE_DEGREE_CAP).contains(&degree_cap) {
        return Err(Error::DimensionCap {
            need: degree_cap.unsigned_abs(),
            cap: STRING_CONE_DEGREE_CAP as u64,
        });
    }
    check_reduced_longest(spec, word)?;
    let mut out = BTreeSet::new();
    for lambda in spec.dominant_weights_up_to(degree_cap) {
        let module = crate::hwmodule::build_hw_module(spec, &lambda)?;
        let set = value_set(&module, word)?;
        for a in set.points {
            out.insert((lambda.clone(), a));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Type-A tableaux crystal
// ---------------------------------------------------------------------------

/// A semistandard Young tableau with entries in 1..=n, used as the
/// combinatorial model for type-A crystals.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

fn is_semistandard(rows: &[Vec<usize>]) -> bool {
    for (r, row) in rows.iter().enumerate() {
        if row.is_empty() {
            return false;
        }
        if r + 1 < rows.len() && rows[r + 1].len() > row.len() {
            return false;
        }
        for (c, &x) in row.iter().enumerate() {
            if x == 0 {
                return false;
            }
            if c > 0 && row[c - 1] > x {
                return false;
            }
            if r > 0 && rows[r - 1][c] >= x {
                return false;
            }
        }
    }
    true
}

impl Tableau {
    /// Validates rows as a semistandard tableau. The empty tableau (no
    /// rows) is the unique tableau of the zero weight.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Tableau> {
        if !is_semistandard(&rows) {
            return Err(Error::InvalidIsotypicData(
                "rows do not form a semistandard tableau".into(),
            ));
        }
        Ok(Tableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.len()).collect()
    }

    /// Number of occurrences of each entry 1..=n.
    pub fn content(&self, n: usize) -> Vec<usize> {
        let mut counts = vec![0usize; n];
        for row in &self.rows {
            for &x in row {
                counts[x - 1] += 1;
            }
        }
        counts
    }

    /// Weight in fundamental-weight coordinates: consecutive differences
    /// of the content vector.
    pub fn weight(&self, rank: usize) -> Weight {
        let counts = self.content(rank + 1);
        (0..rank)
            .map(|i| counts[i] as i64 - counts[i + 1] as i64)
            .collect()
    }

    /// Reading order: rows top to bottom, each row right to left. Returns
    /// box positions with their entries.
    fn reading(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate().rev() {
                out.push((r, c, x));
            }
        }
        out
    }

    /// Surviving signs for letter `i` after cancelling adjacent +- pairs:
    /// positions of unmatched entries `i` (pluses) and `i+1` (minuses).
    fn signature(&self, i: usize) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
        let mut pluses: Vec<(usize, usize)> = Vec::new();
        let mut minuses: Vec<(usize, usize)> = Vec::new();
        for (r, c, x) in self.reading() {
            if x == i {
                pluses.push((r, c));
            } else if x == i + 1 {
                if pluses.is_empty() {
                    minuses.push((r, c));
                } else {
                    pluses.pop();
                }
            }
        }
        (pluses, minuses)
    }

    /// Maximal number of raising moves in direction `i`.
    pub fn eps(&self, i: usize) -> usize {
        self.signature(i).1.len()
    }

    /// Maximal number of lowering moves in direction `i`.
    pub fn phi(&self, i: usize) -> usize {
        self.signature(i).0.len()
    }

    /// Raising operator: turns the rightmost unmatched `i+1` into `i`.
    pub fn raise(&self, i: usize) -> Option<Tableau> {
        let (_, minuses) = self.signature(i);
        let &(r, c) = minuses.last()?;
        let mut rows = self.rows.clone();
        rows[r][c] = i;
        Some(Tableau { rows })
    }

    /// Lowering operator: turns the leftmost unmatched `i` into `i+1`.
    pub fn lower(&self, i: usize) -> Option<Tableau> {
        let (pluses, _) = self.signature(i);
        let &(r, c) = pluses.first()?;
        let mut rows = self.rows.clone();
        rows[r][c] = i + 1;
        Some(Tableau { rows })
    }
}

/// Shape of the tableaux modeling the module of highest weight `lambda`:
/// row lengths are the partial sums of the weight coordinates from the right.
pub fn shape_of_weight(lambda: &[i64]) -> Vec<usize> {
    // partial sums from the right: row r has lambda_r + ... + lambda_rank
    let mut rows = Vec::new();
    let mut acc = 0i64;
    for &x in lambda.iter().rev() {
        acc += x;
        rows.push(acc as usize);
    }
    rows.reverse();
    while rows.last() == Some(&0) {
        rows.pop();
    }
    rows
}

/// All semistandard tableaux of the shape of `lambda` with entries in
/// 1..=rank+1, enumerated by row-major backtracking.
pub fn all_tableaux(spec: &RootSystemSpec, lambda: &[i64]) -> Result<Vec<Tableau>> {
    if spec.family != Family::A {
        return Err(Error::UnsupportedRootSystem(
            "tableaux crystals are implemented for type A only".into(),
        ));
    }
    spec.check_dominant(lambda)?;
    let shape = shape_of_weight(lambda);
    let n = spec.rank + 1;
    let mut rows: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let boxes: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut out = Vec::new();
    fill_boxes(&mut rows, &boxes, 0, n, &mut out);
    Ok(out)
}

fn fill_boxes(
    rows: &mut Vec<Vec<usize>>,
    boxes: &[(usize, usize)],
    k: usize,
    n: usize,
    out: &mut Vec<Tableau>,
) {
    if k == boxes.len() {
        out.push(Tableau { rows: rows.clone() });
        return;
    }
    let (r, c) = boxes[k];
    let mut low = 1;
    if c > 0 {
        low = low.max(rows[r][c - 1]);
    }
    if r > 0 {
        low = low.max(rows[r - 1][c] + 1);
    }
    for x in low..=n {
        rows[r][c] = x;
        fill_boxes(rows, boxes, k + 1, n, out);
    }
    rows[r][c] = 0;
}

/// String parameters of a tableau along a reduced word, computed on the
///orthodox crystal with raising operators: the dual crystal reverses edge
/// labels, so the dual's greedy lowering counts are the primal's greedy
/// raising counts.
pub fn tableaux_string_params(
    spec: &RootSystemSpec,
    lambda: &[i64],
    tableau: &Tableau,
    word: &[usize],
) -> Result<StringParams> {
    if spec.family != Family::A {
        return Err(Error::UnsupportedRootSystem(
            "tableaux crystals are implemented for type A only".into(),
        ));
    }
    spec.check_dominant(lambda)?;
    check_reduced_longest(spec, word)?;
    if tableau.shape() != shape_of_weight(lambda) {
        return Err(Error::InvalidIsotypicData(format!(
            "tableau shape {:?} does not match the weight",
            tableau.shape()
        )));
    }
    if tableau.rows.iter().flatten().any(|&x| x > spec.rank + 1) {
        return Err(Error::InvalidIsotypicData(format!(
            "tableau entries exceed {}",
            spec.rank + 1
        )));
    }
    let mut params = Vec::with_capacity(word.len());
    let mut current = tableau.clone();
    for &i in word {
        let mut count = 0u32;
        while let Some(next) = current.raise(i) {
            current = next;
            count += 1;
        }
        params.push(count);
    }
    Ok(params)
}

/// The full set of string parameters over all tableaux of shape `lambda`:
/// the combinatorial value set, independent of the module construction.
pub fn tableaux_value_set(
    spec: &RootSystemSpec,
    lambda: &[i64],
    word: &[usize],
) -> Result<BTreeSet<StringParams>> {
    let mut out = BTreeSet::new();
    for t in all_tableaux(spec, lambda)? {
        out.insert(tableaux_string_params(spec, lambda, &t, word)?);
    }
    Ok(out)
}

/// Checks that leaf-reduced vectors still span the full dual space.
pub fn spans_dual_space(module: &HWModule, vectors: &[DualVector]) -> bool {
    let mut span = Span::new(module.dim);
    for v in vectors {
        span.insert(v);
    }
    span.dim() == module.dim
}

// ---------------------------------------------------------------------------
