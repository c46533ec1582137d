//! Matrix-coefficient polynomials in the chart coordinates of a product of
//! one-parameter lowering subgroups, the lex highest-term valuation they
//! carry, and product expansions over a leaf-reduced dual basis.
//!
//! A functional sigma on `V_lambda` becomes the polynomial
//! `f_sigma(t) = sigma(exp(t_1 F_{i_1}) ... exp(t_N F_{i_N}) v_lambda)`.
//! Every exponential is a finite sum by nilpotency, so the entries stay
//! exact rationals. The central identity checked here: the lex-largest
//! exponent of `f_sigma` under `t_1 > ... > t_N` equals the string
//! parameters of sigma.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hwmodule::{DualVector, HWModule};
use crate::linalg::{self, Matrix};
use crate::poly_val::{highest_term_valuation, identity_order, MultiPoly};
use crate::ratio::{factorial, Rat};
use crate::rootdata::{Weight, WeylWord};
use crate::strings::{
    adapted_dual_basis, check_reduced_longest, string_params, AdaptedDualBasis, StringParams,
};

// ---------------------------------------------------------------------------
// Chart polynomials
// ---------------------------------------------------------------------------

/// A matrix-coefficient polynomial together with its provenance.
#[derive(Debug, Clone)]
pub struct SectionPoly {
    pub poly: MultiPoly,
    pub lambda: Weight,
    pub word: WeylWord,
    pub sigma: DualVector,
}

/// Applies a rational matrix to a vector of polynomials.
fn mat_vec_polys(m: &Matrix, w: &[MultiPoly]) -> Result<Vec<MultiPoly>> {
    let vars = w.first().map_or(0, MultiPoly::vars);
    let mut out = vec![MultiPoly::zero(vars); m.len()];
    for (r, row) in m.iter().enumerate() {
        for (c, entry) in row.iter().enumerate() {
            if !entry.is_zero() && !w[c].is_zero() {
                out[r] = out[r].add(&w[c].scale(entry))?;
            }
        }
    }
    Ok(out)
}

/// Multiplies `w` by `exp(t_var F_i)` in place: adds `t_var^a / a! F^a w`
/// until the lowering operator annihilates the running term.
fn exp_lowering(
    module: &HWModule,
    i: usize,
    var: usize,
    w: Vec<MultiPoly>,
) -> Result<Vec<MultiPoly>> {
    let vars = w.first().map_or(0, MultiPoly::vars);
    let mut result = w.clone();
    let mut term = w;
    let mut a: u32 = 1;
    loop {
        term = mat_vec_polys(&module.op_f[i - 1], &term)?;
        if term.iter().all(MultiPoly::is_zero) {
            return Ok(result);
        }
        let mut exp = vec![0u32; vars];
        exp[var] = a;
        let mono = MultiPoly::from_terms(vars, [(exp, factorial(a as u64).recip())])?;
        for (r, p) in term.iter().enumerate() {
            if !p.is_zero() {
                result[r] = result[r].add(&p.mul(&mono)?)?;
            }
        }
        a += 1;
        if a as usize > module.dim + 1 {
            return Err(Error::Internal(
                "lowering operator failed to be nilpotent".into(),
            ));
        }
    }
}

/// Coordinates of `exp(t_1 F_{i_1}) ... exp(t_N F_{i_N}) v_lambda` over the
/// module basis: entry b is the chart polynomial of the b-th dual basis
/// functional. Computing this once serves a whole batch of functionals.
pub fn chart_vector(module: &HWModule, word: &[usize]) -> Result<Vec<MultiPoly>> {
    check_reduced_longest(&module.spec, word)?;
    let n = word.len();
    let mut w: Vec<MultiPoly> = (0..module.dim)
        .map(|b| {
            if b == module.hw_index {
                MultiPoly::one(n)
            } else {
                MultiPoly::zero(n)
            }
        })
        .collect();
    for k in (0..n).rev() {
        w = exp_lowering(module, word[k], k, w)?;
    }
    Ok(w)
}

/// Pairs a functional against a chart vector.
pub fn contract(chart: &[MultiPoly], sigma: &DualVector) -> Result<MultiPoly> {
    if chart.len() != sigma.len() {
        return Err(Error::ShapeMismatch(format!(
            "functional has {} coordinates, chart vector has {}",
            sigma.len(),
            chart.len()
        )));
    }
    let vars = chart.first().map_or(0, MultiPoly::vars);
    let mut out = MultiPoly::zero(vars);
    for (p, c) in chart.iter().zip(sigma) {
        if !c.is_zero() && !p.is_zero() {
            out = out.add(&p.scale(c))?;
        }
    }
    Ok(out)
}

/// The matrix-coefficient polynomial of a nonzero functional.
pub fn matrix_coeff_poly(
    module: &HWModule,
    word: &[usize],
    sigma: &DualVector,
) -> Result<SectionPoly> {
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
    let chart = chart_vector(module, word)?;
    Ok(SectionPoly {
        poly: contract(&chart, sigma)?,
        lambda: module.highest_weight.clone(),
        word: word.to_vec(),
        sigma: sigma.clone(),
    })
}

// ---------------------------------------------------------------------------
// Valuation side
// ---------------------------------------------------------------------------

/// Lex-largest exponent of a nonzero polynomial under `t_1 > ... > t_N`,
/// as nonnegative parameters: the negated highest-term valuation.
pub fn lex_top_params(poly: &MultiPoly) -> Result<StringParams> {
    let v = highest_term_valuation(poly, &identity_order(poly.vars()))?;
    Ok(v.iter().map(|&x| (-x) as u32).collect())
}

/// Negated highest-term valuation of a chart polynomial.
pub fn geometric_valuation(f: &SectionPoly) -> Result<StringParams> {
    lex_top_params(&f.poly)
}

/// Second oracle for the valuation: strips the top power of each variable
/// in turn by iterated differentiation, never comparing exponents.
pub fn derivative_valuation(f: &SectionPoly) -> Result<StringParams> {
    let mut current = f.poly.clone();
    if current.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut out = Vec::with_capacity(current.vars());
    for k in 0..current.vars() {
        let mut count = 0u32;
        loop {
            let next = current.partial_derivative(k);
            if next.is_zero() {
                break;
            }
            current = next;
            count += 1;
        }
        current = current.set_var_zero(k);
        if current.is_zero() {
            return Err(Error::Internal(
                "survivor vanished after removing a top power".into(),
            ));
        }
        out.push(count);
    }
    Ok(out)
}

/// Both sides of the parametrization identity for one functional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub string_side: StringParams,
    pub valuation_side: StringParams,
    pub agree: bool,
}

/// Compares string parameters with the negated highest-term valuation of
/// the matrix-coefficient polynomial. Disagreement is a meaningful result,
/// reported rather than raised.
pub fn verify_main_theorem(
    module: &HWModule,
    word: &[usize],
    sigma: &DualVector,
) -> Result<TheoremReport> {
    let string_side = string_params(module, word, sigma)?;
    let f = matrix_coeff_poly(module, word, sigma)?;
    let valuation_side = geometric_valuation(&f)?;
    let agree = string_side == valuation_side;
    Ok(TheoremReport { string_side, valuation_side, agree })
}

/// Batch verification over the full dual basis plus caller-supplied extra
/// functionals; the chart vector is computed once.
pub fn verify_many(
    module: &HWModule,
    word: &[usize],
    extras: &[DualVector],
) -> Result<Vec<TheoremReport>> {
    let chart = chart_vector(module, word)?;
    let mut reports = Vec::new();
    let all: Vec<DualVector> = module.dual_basis().into_iter().chain(extras.iter().cloned()).collect();
    for sigma in &all {
        let string_side = string_params(module, word, sigma)?;
        let poly = contract(&chart, sigma)?;
        let valuation_side = lex_top_params(&poly)?;
        let agree = string_side == valuation_side;
        reports.push(TheoremReport { string_side, valuation_side, agree });
    }
    Ok(reports)
}

// ---------------------------------------------------------------------------
// Product expansion
// ---------------------------------------------------------------------------

/// Precomputed expansion data for one target module: the leaf-reduced dual
/// basis and the chart polynomials of its vectors.
#[derive(Debug, Clone)]
pub struct ExpansionContext {
    pub word: WeylWord,
    pub adapted: AdaptedDualBasis,
    pub basis_polys: Vec<MultiPoly>,
}

impl ExpansionContext {
    pub fn new(target: &HWModule, word: &[usize]) -> Result<ExpansionContext> {
        let adapted = adapted_dual_basis(target, word)?;
        let chart = chart_vector(target, word)?;
        let basis_polys = adapted
            .vectors
            .iter()
            .map(|v| contract(&chart, v))
            .collect::<Result<Vec<_>>>()?;
        Ok(ExpansionContext { word: word.to_vec(), adapted, basis_polys })
    }

    /// Solves `poly = sum c_j f_{b_j}` exactly over the adapted basis.
    pub fn coordinates(&self, poly: &MultiPoly) -> Result<Vec<Rat>> {
        let mut support: BTreeSet<Vec<u32>> = poly.terms().map(|(e, _)| e.clone()).collect();
        for f in &self.basis_polys {
            support.extend(f.terms().map(|(e, _)| e.clone()));
        }
        let rows: Vec<Vec<u32>> = support.into_iter().collect();
        let index: BTreeMap<&Vec<u32>, usize> =
            rows.iter().enumerate().map(|(r, e)| (e, r)).collect();
        let mut a = vec![vec![Rat::zero(); self.basis_polys.len()]; rows.len()];
        for (j, f) in self.basis_polys.iter().enumerate() {
            for (e, c) in f.terms() {
                a[index[e]][j] = c.clone();
            }
        }
        let mut b = vec![Rat::zero(); rows.len()];
        for (e, c) in poly.terms() {
            b[index[e]] = c.clone();
        }
        linalg::solve(&a, &b).ok_or_else(|| {
            Error::ProductOutsideSpan(
                "polynomial is not a combination of the adapted basis".into(),
            )
        })
    }
}

/// Exact expansion of a product of two chart polynomials over the adapted
/// dual basis of the target module.
#[derive(Debug, Clone)]
pub struct ProductExpansion {
    /// Nonzero coefficients by adapted-basis index.
    pub coefficients: Vec<(usize, Rat)>,
    /// String parameters of those indices, aligned with `coefficients`.
    pub term_values: Vec<StringParams>,
    pub leading_value: StringParams,
    pub leading_coeff: Rat,
    /// Sum of the two factors' values; the leading value must equal it.
    pub expected_value: StringParams,
    pub leading_is_additive: bool,
    pub lower_terms_strictly_smaller: bool,
}

/// Multiplies `f_sigma . f_tau` and expands the product over the adapted
/// dual basis of the target module, validating the leading-term shape:
/// a unique top term whose value is the sum of the factors' values.
pub fn expand_product(
    module_left: &HWModule,
    module_right: &HWModule,
    target: &HWModule,
    word: &[usize],
    sigma: &DualVector,
    tau: &DualVector,
) -> Result<ProductExpansion> {
    let f_left = matrix_coeff_poly(module_left, word, sigma)?;
    let f_right = matrix_coeff_poly(module_right, word, tau)?;
    let ctx = ExpansionContext::new(target, word)?;
    expand_in_context(&ctx, &f_left, &f_right)
}

/// Expansion against a precomputed context; useful for batches sharing one
/// target module.
pub fn expand_in_context(
    ctx: &ExpansionContext,
    f_left: &SectionPoly,
    f_right: &SectionPoly,
) -> Result<ProductExpansion> {
    let expected: StringParams = geometric_valuation(f_left)?
        .iter()
        .zip(&geometric_valuation(f_right)?)
        .map(|(a, b)| a + b)
        .collect();
    let product = f_left.poly.mul(&f_right.poly)?;
    let coords = ctx.coordinates(&product)?;
    let mut coefficients = Vec::new();
    let mut term_values = Vec::new();
    for (j, c) in coords.into_iter().enumerate() {
        if !c.is_zero() {
            coefficients.push((j, c));
            term_values.push(ctx.adapted.params[j].clone());
        }
    }
    let top = term_values
        .iter()
        .enumerate()
        .max_by(|(_, a), (_, b)| a.cmp(b))
        .map(|(k, _)| k)
        .ok_or_else(|| Error::Internal("product of nonzero functionals is zero".into()))?;
    let leading_value = term_values[top].clone();
    let leading_coeff = coefficients[top].1.clone();
    let leading_is_additive = leading_value == expected;
    let lower_terms_strictly_smaller = term_values
        .iter()
        .enumerate()
        .all(|(k, v)| k == top || *v < leading_value);
    Ok(ProductExpansion {
        coefficients,
        term_values,
        leading_value,
        leading_coeff,
        expected_value: expected,
        leading_is_additive,
        lower_terms_strictly_smaller,
    })
}

// ---------------------------------------------------------------------------
// Weight-extended valuation
// ---------------------------------------------------------------------------

/// A finite sum of weight components, each carrying a chart polynomial:
/// the torus-times-unipotent decomposition of a function.
#[derive(Debug, Clone, Default)]
pub struct WeightedFunction {
    components: BTreeMap<Weight, MultiPoly>,
}

impl WeightedFunction {
    pub fn new() -> WeightedFunction {
        WeightedFunction::default()
    }

    /// Adds a component, merging with any existing polynomial at that
    /// weight and dropping it if the sum cancels.
    pub fn insert(&mut self, weight: Weight, poly: MultiPoly) -> Result<()> {
        match self.components.remove(&weight) {
            None => {
                if !poly.is_zero() {
                    self.components.insert(weight, poly);
                }
            }
            Some(existing) => {
                let sum = existing.add(&poly)?;
                if !sum.is_zero() {
                    self.components.insert(weight, sum);
                }
            }
        }
        Ok(())
    }

    pub fn components(&self) -> impl Iterator<Item = (&Weight, &MultiPoly)> {
        self.components.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// Convolution product: weights add, polynomials multiply.
    pub fn mul(&self, other: &WeightedFunction) -> Result<WeightedFunction> {
        let mut out = WeightedFunction::new();
        for (w1, p1) in &self.components {
            for (w2, p2) in &other.components {
                let w: Weight = w1.iter().zip(w2).map(|(a, b)| a + b).collect();
                out.insert(w, p1.mul(p2)?)?;
            }
        }
        Ok(out)
    }
}

/// The weight-extended valuation: the minimal weight component in lex
/// order on fundamental-weight coordinates, paired with the negated
/// highest-term valuation of its polynomial.
pub fn weight_extended_valuation(f: &WeightedFunction) -> Result<(Weight, StringParams)> {
    let (weight, poly) = f.components.iter().next().ok_or(Error::ZeroInput)?;
    Ok((weight.clone(), lex_top_params(poly)?))
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hwmodule::build_hw_module;
    use crate::ratio::{rat, ratio};
    use num_traits::One;
    use crate::rootdata::{Family, RootSystemSpec};
    use crate::strings::string_cone_sample;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn a(rank: usize) -> RootSystemSpec {
        RootSystemSpec::new(Family::A, rank).unwrap()
    }

    fn c2() -> RootSystemSpec {
        RootSystemSpec::new(Family::C, 2).unwrap()
    }

    fn t_mono(vars: usize, exp: &[u32], num: i64, den: i64) -> MultiPoly {
        MultiPoly::from_terms(vars, [(exp.to_vec(), ratio(num, den))]).unwrap()
    }

    #[test]
    fn highest_functional_gives_the_constant_one() {
        let module = build_hw_module(&a(2), &[1, 1]).unwrap();
        let f = matrix_coeff_poly(&module, &[1, 2, 1], &module.tau()).unwrap();
        assert_eq!(f.poly, MultiPoly::one(3));
        assert_eq!(geometric_valuation(&f).unwrap(), vec![0, 0, 0]);
    }

    #[test]
    fn a1_chart_polynomials_are_frozen() {
        let module = build_hw_module(&a(1), &[2]).unwrap();
        let chart = chart_vector(&module, &[1]).unwrap();
        assert_eq!(chart[0], MultiPoly::one(1));
        assert_eq!(chart[1], t_mono(1, &[1], 1, 1));
        assert_eq!(chart[2], t_mono(1, &[2], 1, 2));
    }

    #[test]
    fn a2_defining_chart_polynomials_are_frozen() {
        let module = build_hw_module(&a(2), &[1, 0]).unwrap();
        let chart = chart_vector(&module, &[1, 2, 1]).unwrap();
        assert_eq!(chart[0], MultiPoly::one(3));
        let expect1 = t_mono(3, &[1, 0, 0], 1, 1).add(&t_mono(3, &[0, 0, 1], 1, 1)).unwrap();
        assert_eq!(chart[1], expect1);
        assert_eq!(chart[2], t_mono(3, &[0, 1, 1], 1, 1));
    }

    #[test]
    fn c2_chart_polynomials_match_string_values() {
        let module = build_hw_module(&c2(), &[1, 0]).unwrap();
        let word = vec![1, 2, 1, 2];
        let chart = chart_vector(&module, &word).unwrap();
        assert_eq!(chart[3], t_mono(4, &[1, 1, 1, 0], 1, 1));
        let expect: Vec<StringParams> = vec![
            vec![0, 0, 0, 0],
            vec![1, 0, 0, 0],
            vec![0, 1, 1, 0],
            vec![1, 1, 1, 0],
        ];
        for (b, want) in expect.iter().enumerate() {
            assert_eq!(&lex_top_params(&chart[b]).unwrap(), want);
        }
    }

    #[test]
    fn main_theorem_holds_on_dual_bases() {
        let cases: Vec<(RootSystemSpec, Weight, WeylWord)> = vec![
            (a(1), vec![3], vec![1]),
            (a(2), vec![1, 1], vec![1, 2, 1]),
            (a(2), vec![1, 1], vec![2, 1, 2]),
            (c2(), vec![1, 0], vec![1, 2, 1, 2]),
            (c2(), vec![0, 1], vec![1, 2, 1, 2]),
        ];
        for (spec, lambda, word) in cases {
            let module = build_hw_module(&spec, &lambda).unwrap();
            for report in verify_many(&module, &word, &[]).unwrap() {
                assert!(report.agree, "{:?} vs {:?}", report.string_side, report.valuation_side);
            }
        }
    }

    #[test]
    fn derivative_oracle_agrees_with_lex_maximum() {
        let module = build_hw_module(&a(2), &[2, 1]).unwrap();
        let word = vec![1, 2, 1];
        for sigma in module.dual_basis() {
            let f = matrix_coeff_poly(&module, &word, &sigma).unwrap();
            assert_eq!(
                geometric_valuation(&f).unwrap(),
                derivative_valuation(&f).unwrap()
            );
        }
    }

    #[test]
    fn first_parameter_is_the_leading_variable_degree() {
        for m in 1..=4i64 {
            let module = build_hw_module(&a(1), &[m]).unwrap();
            for sigma in module.dual_basis() {
                let params = string_params(&module, &[1], &sigma).unwrap();
                let f = matrix_coeff_poly(&module, &[1], &sigma).unwrap();
                assert_eq!(params[0], f.poly.degree_in(0).unwrap());
            }
        }
        let module = build_hw_module(&a(2), &[1, 1]).unwrap();
        for sigma in module.dual_basis() {
            let params = string_params(&module, &[1, 2, 1], &sigma).unwrap();
            let f = matrix_coeff_poly(&module, &[1, 2, 1], &sigma).unwrap();
            assert_eq!(params[0], f.poly.degree_in(0).unwrap());
        }
    }

    #[test]
    fn random_functionals_satisfy_the_theorem() {
        let module = build_hw_module(&a(2), &[1, 1]).unwrap();
        let word = vec![1, 2, 1];
        let mut rng = StdRng::seed_from_u64(23);
        let extras: Vec<DualVector> = (0..10)
            .map(|_| (0..module.dim).map(|_| rat(rng.gen_range(-5..=5))).collect())
            .filter(|v: &DualVector| !linalg::is_zero_vec(v))
            .collect();
        for report in verify_many(&module, &word, &extras).unwrap() {
            assert!(report.agree);
        }
    }

    #[test]
    fn a1_square_expands_with_doubled_value() {
        let m1 = build_hw_module(&a(1), &[1]).unwrap();
        let m2 = build_hw_module(&a(1), &[2]).unwrap();
        let sigma = m1.dual_basis_vector(1);
        let exp = expand_product(&m1, &m1, &m2, &[1], &sigma, &sigma).unwrap();
        assert_eq!(exp.leading_value, vec![2]);
        assert!(exp.leading_is_additive);
        assert!(exp.lower_terms_strictly_smaller);
        // t * t = 2 * (t^2/2)
        assert_eq!(exp.coefficients.len(), 1);
        assert_eq!(exp.coefficients[0].1, rat(2));
    }

    #[test]
    fn highest_times_highest_is_highest() {
        let m = build_hw_module(&a(2), &[1, 0]).unwrap();
        let target = build_hw_module(&a(2), &[2, 0]).unwrap();
        let exp =
            expand_product(&m, &m, &target, &[1, 2, 1], &m.tau(), &m.tau()).unwrap();
        assert_eq!(exp.leading_value, vec![0, 0, 0]);
        assert_eq!(exp.coefficients.len(), 1);
        assert_eq!(exp.coefficients[0].0, target.hw_index);
        assert!(exp.coefficients[0].1.is_one());
    }

    #[test]
    fn all_defining_products_have_additive_leading_values() {
        let m = build_hw_module(&a(2), &[1, 0]).unwrap();
        let target = build_hw_module(&a(2), &[2, 0]).unwrap();
        let word = vec![1, 2, 1];
        let ctx = ExpansionContext::new(&target, &word).unwrap();
        let chart = chart_vector(&m, &word).unwrap();
        for s in 0..m.dim {
            for t in 0..m.dim {
                let sigma = m.dual_basis_vector(s);
                let tau = m.dual_basis_vector(t);
                let f_left = SectionPoly {
                    poly: contract(&chart, &sigma).unwrap(),
                    lambda: m.highest_weight.clone(),
                    word: word.clone(),
                    sigma,
                };
                let f_right = SectionPoly {
                    poly: contract(&chart, &tau).unwrap(),
                    lambda: m.highest_weight.clone(),
                    word: word.clone(),
                    sigma: tau,
                };
                let exp = expand_in_context(&ctx, &f_left, &f_right).unwrap();
                assert!(exp.leading_is_additive);
                assert!(exp.lower_terms_strictly_smaller);
            }
        }
    }

    #[test]
    fn weighted_valuation_picks_the_minimal_weight() {
        let mut f = WeightedFunction::new();
        f.insert(vec![2, 0], MultiPoly::var(3, 0)).unwrap();
        f.insert(vec![1, 0], MultiPoly::one(3)).unwrap();
        let (w, params) = weight_extended_valuation(&f).unwrap();
        assert_eq!(w, vec![1, 0]);
        assert_eq!(params, vec![0, 0, 0]);
        assert!(weight_extended_valuation(&WeightedFunction::new()).is_err());
    }

    #[test]
    fn weighted_values_multiply_additively() {
        let mut f = WeightedFunction::new();
        f.insert(vec![1, 0], MultiPoly::var(3, 0)).unwrap();
        let mut g = WeightedFunction::new();
        g.insert(vec![0, 1], MultiPoly::var(3, 2)).unwrap();
        let (w, params) = weight_extended_valuation(&f.mul(&g).unwrap()).unwrap();
        assert_eq!(w, vec![1, 1]);
        assert_eq!(params, vec![1, 0, 1]);
    }

    #[test]
    fn weighted_values_on_adapted_bases_match_the_cone_sample() {
        let spec = a(1);
        let sample = string_cone_sample(&spec, &[1], 2).unwrap();
        let mut observed = BTreeSet::new();
        for m in 0..=2i64 {
            let module = build_hw_module(&spec, &[m]).unwrap();
            let ctx = ExpansionContext::new(&module, &[1]).unwrap();
            for poly in &ctx.basis_polys {
                let mut f = WeightedFunction::new();
                f.insert(vec![m], poly.clone()).unwrap();
                let (w, params) = weight_extended_valuation(&f).unwrap();
                observed.insert((w, params));
            }
        }
        assert_eq!(observed, sample);
    }

    #[test]
    fn rejects_zero_functionals() {
        let module = build_hw_module(&a(1), &[1]).unwrap();
        let zero = vec![rat(0); module.dim];
        assert!(matches!(
            matrix_coeff_poly(&module, &[1], &zero),
            Err(Error::ZeroInput)
        ));
    }
}
