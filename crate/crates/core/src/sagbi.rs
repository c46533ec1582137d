//! Subduction over graded algebras with term valuations, generator
//! completeness checks, semigroup algebras with unit structure constants,
//! and the structure-constant family degenerating a section ring onto its
//! value semigroup algebra.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::bott_samelson::{expand_in_context, ExpansionContext, SectionPoly};
use crate::error::{Error, Result};
use crate::hwmodule::build_hw_module;
use crate::nok::ValueSemigroup;
use crate::poly_val::{
    extremal_coeff, highest_term_valuation, identity_order, lowest_term_valuation, GradedValue,
    MultiPoly, ValVector,
};
use crate::ratio::Rat;
use crate::rootdata::{RootSystemSpec, Weight};
use crate::strings::StringParams;

/// Default bound on subduction steps; generous for desk-scale inputs.
pub const DEFAULT_STEP_CAP: usize = 4096;

// ---------------------------------------------------------------------------
// Graded elements and term valuations
// ---------------------------------------------------------------------------

/// An element of a graded algebra realized as a polynomial: products
/// multiply the polynomials and add the levels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedElement {
    pub level: u32,
    pub poly: MultiPoly,
}

/// One of the two term valuations, fixed by a variable priority order and
/// the choice of extremal term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermValuation {
    pub order: Vec<usize>,
    pub highest: bool,
}

impl TermValuation {
    /// Highest-term valuation in the identity priority order.
    pub fn highest(vars: usize) -> TermValuation {
        TermValuation { order: identity_order(vars), highest: true }
    }

    /// Lowest-term valuation in the identity priority order.
    pub fn lowest(vars: usize) -> TermValuation {
        TermValuation { order: identity_order(vars), highest: false }
    }

    pub fn value(&self, f: &MultiPoly) -> Result<ValVector> {
        if self.highest {
            highest_term_valuation(f, &self.order)
        } else {
            lowest_term_valuation(f, &self.order)
        }
    }

    /// Coefficient of the term achieving the valuation.
    pub fn leading_coeff(&self, f: &MultiPoly) -> Result<Rat> {
        Ok(extremal_coeff(f, &self.order, self.highest)?.1)
    }

    pub fn graded_value(&self, g: &GradedElement) -> Result<GradedValue> {
        Ok(GradedValue { level: g.level, tail: self.value(&g.poly)? })
    }
}

/// A generator together with its graded value, recomputed on construction.
#[derive(Debug, Clone)]
pub struct ValuedGenerator {
    pub element: GradedElement,
    pub value: GradedValue,
}

impl ValuedGenerator {
    pub fn new(element: GradedElement, valuation: &TermValuation) -> Result<ValuedGenerator> {
        if element.level == 0 {
            return Err(Error::ShapeMismatch(
                "generators must live in positive levels".into(),
            ));
        }
        let value = valuation.graded_value(&element)?;
        Ok(ValuedGenerator { element, value })
    }
}

/// Wraps each element of a sample as a valued generator.
pub fn valued_generators(
    sample: &[GradedElement],
    valuation: &TermValuation,
) -> Result<Vec<ValuedGenerator>> {
    sample
        .iter()
        .map(|g| ValuedGenerator::new(g.clone(), valuation))
        .collect()
}

// ---------------------------------------------------------------------------
// Subduction
// ---------------------------------------------------------------------------

/// One cancellation: subtract `coeff` times the generator monomial with
/// the given exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubductionStep {
    pub exponents: Vec<u32>,
    pub coeff: Rat,
}

/// A complete subduction run. Replaying the steps (plus the remainder, if
/// any) reconstructs the input exactly.
#[derive(Debug, Clone)]
pub struct SubductionTrace {
    pub level: u32,
    pub vars: usize,
    pub steps: Vec<SubductionStep>,
    pub remainder: Option<GradedElement>,
}

impl SubductionTrace {
    /// Rebuilds the input element from the trace.
    pub fn replay(&self, generators: &[ValuedGenerator]) -> Result<GradedElement> {
        let mut poly = MultiPoly::zero(self.vars);
        for step in &self.steps {
            let (level, mono) = generator_monomial(generators, &step.exponents, self.vars)?;
            if level != self.level {
                return Err(Error::ShapeMismatch(format!(
                    "step monomial lives at level {level}, trace at level {}",
                    self.level
                )));
            }
            poly = poly.add(&mono.scale(&step.coeff))?;
        }
        if let Some(rem) = &self.remainder {
            poly = poly.add(&rem.poly)?;
        }
        Ok(GradedElement { level: self.level, poly })
    }
}

/// Product of generator powers, with its level.
fn generator_monomial(
    generators: &[ValuedGenerator],
    exponents: &[u32],
    vars: usize,
) -> Result<(u32, MultiPoly)> {
    if exponents.len() != generators.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} exponents for {} generators",
            exponents.len(),
            generators.len()
        )));
    }
    let mut level = 0u32;
    let mut poly = MultiPoly::one(vars);
    for (gen, &e) in generators.iter().zip(exponents) {
        if e > 0 {
            level += gen.element.level * e;
            poly = poly.mul(&gen.element.poly.pow(e))?;
        }
    }
    Ok((level, poly))
}

/// Finds exponents with `sum e_i . value_i = target`, or None. The level
/// equation bounds the search; the first solution in ascending lex order
/// over the exponent vector is returned, so the choice is deterministic.
fn find_exponents(generators: &[ValuedGenerator], target: &GradedValue) -> Option<Vec<u32>> {
    fn go(
        generators: &[ValuedGenerator],
        idx: usize,
        level_left: u32,
        tail_left: &mut ValVector,
        partial: &mut Vec<u32>,
    ) -> bool {
        if idx == generators.len() {
            return level_left == 0 && tail_left.iter().all(|&c| c == 0);
        }
        let gen = &generators[idx];
        let max_e = level_left / gen.element.level;
        for e in 0..=max_e {
            partial.push(e);
            for (t, v) in tail_left.iter_mut().zip(&gen.value.tail) {
                *t -= v * e as i64;
            }
            if go(generators, idx + 1, level_left - e * gen.element.level, tail_left, partial) {
                return true;
            }
            for (t, v) in tail_left.iter_mut().zip(&gen.value.tail) {
                *t += v * e as i64;
            }
            partial.pop();
        }
        false
    }
    let mut tail = target.tail.clone();
    let mut partial = Vec::with_capacity(generators.len());
    if go(generators, 0, target.level, &mut tail, &mut partial) {
        Some(partial)
    } else {
        None
    }
}

/// Runs subduction to completion, returning the unsubductable rest as a
/// trace remainder rather than an error. The running value strictly
/// increases each step, so the loop terminates on graded inputs.
pub fn try_subduct(
    h: &GradedElement,
    generators: &[ValuedGenerator],
    valuation: &TermValuation,
    step_cap: usize,
) -> Result<SubductionTrace> {
    let vars = h.poly.vars();
    for gen in generators {
        if gen.element.poly.vars() != vars {
            return Err(Error::ShapeMismatch(
                "generators and input disagree on variable count".into(),
            ));
        }
    }
    let mut trace =
        SubductionTrace { level: h.level, vars, steps: Vec::new(), remainder: None };
    let mut g = h.poly.clone();
    let mut last: Option<GradedValue> = None;
    loop {
        if g.is_zero() {
            return Ok(trace);
        }
        if trace.steps.len() >= step_cap {
            return Err(Error::SubductionInconclusive(trace.steps.len()));
        }
        let value = GradedValue { level: h.level, tail: valuation.value(&g)? };
        if let Some(prev) = &last {
            if value <= *prev {
                return Err(Error::Internal(
                    "subduction failed to raise the running value".into(),
                ));
            }
        }
        let Some(exponents) = find_exponents(generators, &value) else {
            trace.remainder = Some(GradedElement { level: h.level, poly: g });
            return Ok(trace);
        };
        let (_, mono) = generator_monomial(generators, &exponents, vars)?;
        let c = valuation.leading_coeff(&g)? / valuation.leading_coeff(&mono)?;
        g = g.sub(&mono.scale(&c))?;
        trace.steps.push(SubductionStep { exponents, coeff: c });
        last = Some(value);
    }
}

/// Subduction that must finish with zero remainder: a leftover value
/// outside the generated semigroup is an error, witnessing that the
/// generators are not a complete valued generating set.
pub fn subduct(
    h: &GradedElement,
    generators: &[ValuedGenerator],
    valuation: &TermValuation,
    step_cap: usize,
) -> Result<SubductionTrace> {
    let trace = try_subduct(h, generators, valuation, step_cap)?;
    if let Some(rem) = &trace.remainder {
        let value = valuation.graded_value(rem)?;
        return Err(Error::NotRepresentable(format!(
            "value (level {}, {:?}) is not in the semigroup generated by the generator values",
            value.level, value.tail
        )));
    }
    Ok(trace)
}

// ---------------------------------------------------------------------------
// Generator completeness
// ---------------------------------------------------------------------------

/// Outcome of checking generators against a graded sample: every sample
/// element must subduct to zero remainder.
#[derive(Debug, Clone)]
pub struct SagbiReport {
    pub holds: bool,
    pub checked: usize,
    /// First unsubductable remainder, if the check fails.
    pub witness: Option<GradedElement>,
    pub witness_value: Option<GradedValue>,
}

/// Checks whether the generator values generate the whole sampled value
/// semigroup, by subducting a spanning set of each graded piece.
pub fn is_sagbi(
    generators: &[ValuedGenerator],
    sample: &[GradedElement],
    valuation: &TermValuation,
    step_cap: usize,
) -> Result<SagbiReport> {
    let mut checked = 0;
    for h in sample {
        let trace = try_subduct(h, generators, valuation, step_cap)?;
        checked += 1;
        if let Some(rem) = trace.remainder {
            let value = valuation.graded_value(&rem)?;
            return Ok(SagbiReport {
                holds: false,
                checked,
                witness: Some(rem),
                witness_value: Some(value),
            });
        }
    }
    Ok(SagbiReport { holds: true, checked, witness: None, witness_value: None })
}

// ---------------------------------------------------------------------------
// Semigroup algebras
// ---------------------------------------------------------------------------

/// The monomial algebra on a value semigroup: basis indexed by graded
/// points (the origin first), every product a single basis element with
/// structure constant 1.
#[derive(Debug, Clone)]
pub struct SemigroupAlgebra {
    pub basis: Vec<(u32, Vec<i64>)>,
    pub level_cap: u32,
    /// products[(i, j)] = k for i <= j: basis_i . basis_j = basis_k.
    pub products: BTreeMap<(usize, usize), usize>,
}

impl SemigroupAlgebra {
    /// Table lookup, symmetric in the arguments.
    pub fn product(&self, i: usize, j: usize) -> Option<usize> {
        let key = if i <= j { (i, j) } else { (j, i) };
        self.products.get(&key).copied()
    }

    /// The table keyed by the graded points themselves, with each key pair
    /// sorted. Suitable for comparison against a degeneration family.
    pub fn value_product_map(
        &self,
    ) -> BTreeMap<((u32, Vec<i64>), (u32, Vec<i64>)), (u32, Vec<i64>)> {
        let mut map = BTreeMap::new();
        for (&(i, j), &k) in &self.products {
            let mut pair = [self.basis[i].clone(), self.basis[j].clone()];
            pair.sort();
            let [p, q] = pair;
            map.insert((p, q), self.basis[k].clone());
        }
        map
    }

    /// Exhaustive associativity check over in-range triples.
    pub fn check_associativity(&self) -> Result<()> {
        let n = self.basis.len();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let total = self.basis[i].0 + self.basis[j].0 + self.basis[k].0;
                    if total > self.level_cap {
                        continue;
                    }
                    let left = self
                        .product(i, j)
                        .and_then(|ij| self.product(ij, k));
                    let right = self
                        .product(j, k)
                        .and_then(|jk| self.product(i, jk));
                    if left.is_none() || left != right {
                        return Err(Error::Internal(format!(
                            "associativity fails on basis triple ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Builds the semigroup algebra of an additively closed sample: the
/// product of two graded points is their sum whenever it stays in range.
pub fn semigroup_algebra(semigroup: &ValueSemigroup) -> Result<SemigroupAlgebra> {
    semigroup.check_additive_closure()?;
    let level_cap = semigroup.max_level();
    let mut basis = vec![(0u32, vec![0i64; semigroup.ambient])];
    basis.extend(semigroup.points.iter().cloned());
    let index: BTreeMap<(u32, Vec<i64>), usize> =
        basis.iter().enumerate().map(|(k, p)| (p.clone(), k)).collect();
    let mut products = BTreeMap::new();
    for i in 0..basis.len() {
        for j in i..basis.len() {
            let level = basis[i].0 + basis[j].0;
            if level > level_cap {
                continue;
            }
            let sum: Vec<i64> =
                basis[i].1.iter().zip(&basis[j].1).map(|(a, b)| a + b).collect();
            let k = index.get(&(level, sum)).copied().ok_or_else(|| {
                Error::NotAdditivelyClosed(format!(
                    "product of basis points {i} and {j} escapes the sample"
                ))
            })?;
            products.insert((i, j), k);
        }
    }
    Ok(SemigroupAlgebra { basis, level_cap, products })
}

// ---------------------------------------------------------------------------
// Degeneration family
// ---------------------------------------------------------------------------

/// One product in the degeneration family: a leading term of additive
/// value and lower terms recorded with their lex gaps to the leading
/// value. Specializing away the lower terms and rescaling to a monic
/// leading constant gives the semigroup algebra product.
#[derive(Debug, Clone)]
pub struct DegenerationEntry {
    pub left: (u32, StringParams),
    pub right: (u32, StringParams),
    pub leading: (u32, StringParams),
    pub leading_coeff: Rat,
    /// Lower terms: (value, coefficient, leading value minus this value).
    pub lower: Vec<(StringParams, Rat, Vec<i64>)>,
}

/// All basis products of a section-ring sample, each split into leading
/// and lower terms. The family interpolates between the original algebra
/// (keep everything) and its toric limit (keep only leading terms).
#[derive(Debug, Clone)]
pub struct DegenerationFamily {
    pub level_cap: u32,
    pub entries: Vec<DegenerationEntry>,
}

fn params_point(p: &StringParams) -> Vec<i64> {
    p.iter().map(|&x| x as i64).collect()
}

impl DegenerationFamily {
    /// The limit table: value pairs mapped to the leading value, with all
    /// structure constants rescaled to 1.
    pub fn t_zero_table(
        &self,
    ) -> BTreeMap<((u32, Vec<i64>), (u32, Vec<i64>)), (u32, Vec<i64>)> {
        let mut map = BTreeMap::new();
        for e in &self.entries {
            let mut pair = [
                (e.left.0, params_point(&e.left.1)),
                (e.right.0, params_point(&e.right.1)),
            ];
            pair.sort();
            let [p, q] = pair;
            map.insert((p, q), (e.leading.0, params_point(&e.leading.1)));
        }
        map
    }

    /// True when no product has lower terms: the algebra is already toric
    /// and the family is constant.
    pub fn is_constant(&self) -> bool {
        self.entries.iter().all(|e| e.lower.is_empty())
    }
}

/// Expands every pair of adapted-dual-basis products of the weight ray
/// through the level cap. Each product must exhibit the valuation shape:
/// a nonzero leading coefficient on the value-additive term, and strictly
/// smaller values elsewhere.
pub fn degeneration_family(
    spec: &RootSystemSpec,
    word: &[usize],
    lambda: &[i64],
    level_cap: u32,
) -> Result<DegenerationFamily> {
    if level_cap < 2 {
        return Err(Error::ShapeMismatch(
            "level cap must be at least 2 to form a product".into(),
        ));
    }
    let mut contexts: Vec<ExpansionContext> = Vec::new();
    let mut weights: Vec<Weight> = Vec::new();
    for k in 1..=level_cap {
        let scaled: Weight = lambda.iter().map(|&x| x * k as i64).collect();
        let module = build_hw_module(spec, &scaled)?;
        contexts.push(ExpansionContext::new(&module, word)?);
        weights.push(scaled);
    }
    let section = |k: u32, i: usize| -> SectionPoly {
        let ctx = &contexts[k as usize - 1];
        SectionPoly {
            poly: ctx.basis_polys[i].clone(),
            lambda: weights[k as usize - 1].clone(),
            word: word.to_vec(),
            sigma: ctx.adapted.vectors[i].clone(),
        }
    };
    let mut entries = Vec::new();
    for k1 in 1..=level_cap {
        for k2 in k1..=level_cap {
            if k1 + k2 > level_cap {
                continue;
            }
            let target = &contexts[(k1 + k2) as usize - 1];
            let left_len = contexts[k1 as usize - 1].adapted.vectors.len();
            let right_len = contexts[k2 as usize - 1].adapted.vectors.len();
            for i in 0..left_len {
                let start = if k1 == k2 { i } else { 0 };
                for j in start..right_len {
                    let expansion =
                        expand_in_context(target, &section(k1, i), &section(k2, j))?;
                    if !expansion.leading_is_additive
                        || !expansion.lower_terms_strictly_smaller
                        || expansion.leading_coeff.is_zero()
                    {
                        return Err(Error::Internal(format!(
                            "product at levels ({k1}, {k2}) lacks an additive leading term"
                        )));
                    }
                    let leading = expansion.leading_value.clone();
                    let mut lower = Vec::new();
                    for (m, (_, c)) in expansion.coefficients.iter().enumerate() {
                        let value = expansion.term_values[m].clone();
                        if value == leading {
                            continue;
                        }
                        let gap: Vec<i64> = leading
                            .iter()
                            .zip(&value)
                            .map(|(a, b)| *a as i64 - *b as i64)
                            .collect();
                        lower.push((value, c.clone(), gap));
                    }
                    entries.push(DegenerationEntry {
                        left: (k1, contexts[k1 as usize - 1].adapted.params[i].clone()),
                        right: (k2, contexts[k2 as usize - 1].adapted.params[j].clone()),
                        leading: (k1 + k2, leading),
                        leading_coeff: expansion.leading_coeff,
                        lower,
                    });
                }
            }
        }
    }
    Ok(DegenerationFamily { level_cap, entries })
}

/// Compares the family's limit table with a semigroup algebra table on
/// their shared domain: all positive-level products within the family's
/// level cap must agree, and both tables must cover the same pairs.
pub fn degeneration_matches_semigroup(
    family: &DegenerationFamily,
    algebra: &SemigroupAlgebra,
) -> bool {
    let t0 = family.t_zero_table();
    let full = algebra.value_product_map();
    for (pair, result) in &t0 {
        if full.get(pair) != Some(result) {
            return false;
        }
    }
    for pair in full.keys() {
        let in_range =
            pair.0 .0 >= 1 && pair.1 .0 >= 1 && pair.0 .0 + pair.1 .0 <= family.level_cap;
        if in_range && !t0.contains_key(pair) {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Section-ring samples
// ---------------------------------------------------------------------------

/// Chart realizations of the adapted dual bases of the weight ray: a
/// spanning set of each section-ring level through the cap. Level k
/// contributes one graded element per basis functional of the level-k
/// module.
pub fn section_ring_sample(
    spec: &RootSystemSpec,
    word: &[usize],
    lambda: &[i64],
    level_cap: u32,
) -> Result<Vec<GradedElement>> {
    let mut sample = Vec::new();
    for k in 1..=level_cap {
        let scaled: Weight = lambda.iter().map(|&x| x * k as i64).collect();
        let module = build_hw_module(spec, &scaled)?;
        let ctx = ExpansionContext::new(&module, word)?;
        for poly in ctx.basis_polys {
            sample.push(GradedElement { level: k, poly });
        }
    }
    Ok(sample)
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::rat;
    use crate::rootdata::Family;

    fn a(rank: usize) -> RootSystemSpec {
        RootSystemSpec::new(Family::A, rank).unwrap()
    }

    fn xy_setup() -> (TermValuation, Vec<ValuedGenerator>) {
        let val = TermValuation::highest(2);
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        let gens = valued_generators(
            &[
                GradedElement { level: 1, poly: x.add(&y).unwrap() },
                GradedElement { level: 2, poly: x.mul(&y).unwrap() },
            ],
            &val,
        )
        .unwrap();
        (val, gens)
    }

    #[test]
    fn worked_example_subducts_in_two_steps() {
        let (val, gens) = xy_setup();
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        let h = GradedElement {
            level: 2,
            poly: x.pow(2).add(&y.pow(2)).unwrap(),
        };
        let trace = subduct(&h, &gens, &val, DEFAULT_STEP_CAP).unwrap();
        assert!(trace.remainder.is_none());
        assert_eq!(
            trace.steps,
            vec![
                SubductionStep { exponents: vec![2, 0], coeff: rat(1) },
                SubductionStep { exponents: vec![0, 1], coeff: rat(-2) },
            ]
        );
        assert_eq!(trace.replay(&gens).unwrap(), h);
    }

    #[test]
    fn generator_subducts_in_one_step() {
        let (val, gens) = xy_setup();
        let trace = subduct(&gens[1].element, &gens, &val, DEFAULT_STEP_CAP).unwrap();
        assert_eq!(
            trace.steps,
            vec![SubductionStep { exponents: vec![0, 1], coeff: rat(1) }]
        );
        assert_eq!(trace.replay(&gens).unwrap(), gens[1].element);
    }

    #[test]
    fn unreachable_value_is_not_representable() {
        let val = TermValuation::highest(1);
        let x = MultiPoly::var(1, 0);
        let gens = valued_generators(
            &[
                GradedElement { level: 2, poly: x.pow(2) },
                GradedElement { level: 3, poly: x.pow(3) },
            ],
            &val,
        )
        .unwrap();
        let h = GradedElement { level: 1, poly: x.clone() };
        assert!(matches!(
            subduct(&h, &gens, &val, DEFAULT_STEP_CAP),
            Err(Error::NotRepresentable(_))
        ));
        let trace = try_subduct(&h, &gens, &val, DEFAULT_STEP_CAP).unwrap();
        assert_eq!(trace.remainder, Some(h.clone()));
        assert_eq!(trace.replay(&gens).unwrap(), h);
    }

    #[test]
    fn a1_level_one_generators_are_complete() {
        let spec = a(1);
        let val = TermValuation::highest(1);
        let gens =
            valued_generators(&section_ring_sample(&spec, &[1], &[1], 1).unwrap(), &val)
                .unwrap();
        let sample = section_ring_sample(&spec, &[1], &[1], 3).unwrap();
        assert_eq!(sample.len(), 2 + 3 + 4);
        let report = is_sagbi(&gens, &sample, &val, DEFAULT_STEP_CAP).unwrap();
        assert!(report.holds);
        assert_eq!(report.checked, 9);
        // every element reconstructs exactly
        for h in &sample {
            let trace = subduct(h, &gens, &val, DEFAULT_STEP_CAP).unwrap();
            assert_eq!(trace.replay(&gens).unwrap(), *h);
        }
    }

    #[test]
    fn removing_a_generator_yields_a_witness() {
        let spec = a(1);
        let val = TermValuation::highest(1);
        let all =
            valued_generators(&section_ring_sample(&spec, &[1], &[1], 1).unwrap(), &val)
                .unwrap();
        // keep only the generator with value tail (0): the string value 1
        // becomes unreachable at level 1
        let kept: Vec<ValuedGenerator> = all
            .iter()
            .filter(|g| g.value.tail == vec![0])
            .cloned()
            .collect();
        assert_eq!(kept.len(), 1);
        let sample = section_ring_sample(&spec, &[1], &[1], 2).unwrap();
        let report = is_sagbi(&kept, &sample, &val, DEFAULT_STEP_CAP).unwrap();
        assert!(!report.holds);
        let value = report.witness_value.unwrap();
        assert_eq!((value.level, value.tail), (1, vec![-1]));
    }

    #[test]
    fn empty_generators_check_trivially() {
        let val = TermValuation::highest(1);
        let report = is_sagbi(&[], &[], &val, DEFAULT_STEP_CAP).unwrap();
        assert!(report.holds);
        assert_eq!(report.checked, 0);
    }

    #[test]
    fn semigroup_algebra_multiplies_by_addition() {
        let sg = ValueSemigroup::from_string_values(&a(1), &[1], &[1], 2).unwrap();
        let alg = semigroup_algebra(&sg).unwrap();
        assert_eq!(alg.basis.len(), 6);
        assert_eq!(alg.basis[0], (0, vec![0]));
        let i = alg.basis.iter().position(|p| *p == (1, vec![0])).unwrap();
        let j = alg.basis.iter().position(|p| *p == (1, vec![1])).unwrap();
        let k = alg.product(i, j).unwrap();
        assert_eq!(alg.basis[k], (2, vec![1]));
        // the origin is the identity
        for m in 0..alg.basis.len() {
            assert_eq!(alg.product(0, m), Some(m));
        }
        alg.check_associativity().unwrap();
    }

    #[test]
    fn a2_semigroup_algebra_is_associative() {
        let sg =
            ValueSemigroup::from_string_values(&a(2), &[1, 2, 1], &[1, 0], 3).unwrap();
        let alg = semigroup_algebra(&sg).unwrap();
        alg.check_associativity().unwrap();
    }

    #[test]
    fn gapped_semigroup_is_rejected() {
        let mut points = ValueSemigroup::from_string_values(&a(1), &[1], &[1], 2)
            .unwrap()
            .points;
        points.remove(&(2, vec![1]));
        let sg = ValueSemigroup::new(1, points).unwrap();
        assert!(matches!(
            semigroup_algebra(&sg),
            Err(Error::NotAdditivelyClosed(_))
        ));
    }

    #[test]
    fn a1_degeneration_limit_is_the_semigroup_table() {
        let spec = a(1);
        let family = degeneration_family(&spec, &[1], &[1], 2).unwrap();
        assert_eq!(family.entries.len(), 3);
        // chart polynomials of the interval module are monomials, so the
        // family is already toric
        assert!(family.is_constant());
        for e in &family.entries {
            assert!(!e.leading_coeff.is_zero());
        }
        let sg = ValueSemigroup::from_string_values(&spec, &[1], &[1], 2).unwrap();
        let alg = semigroup_algebra(&sg).unwrap();
        assert!(degeneration_matches_semigroup(&family, &alg));
    }

    #[test]
    fn a2_degeneration_limit_is_the_semigroup_table() {
        let spec = a(2);
        let word = vec![1, 2, 1];
        let family = degeneration_family(&spec, &word, &[1, 0], 3).unwrap();
        // levels (1,1) give C(3+1, 2) = 6 pairs, levels (1,2) give 3 * 6
        assert_eq!(family.entries.len(), 6 + 18);
        let sg = ValueSemigroup::from_string_values(&spec, &word, &[1, 0], 3).unwrap();
        let alg = semigroup_algebra(&sg).unwrap();
        assert!(degeneration_matches_semigroup(&family, &alg));
        for e in &family.entries {
            for (_, c, gap) in &e.lower {
                assert!(!c.is_zero());
                // gaps are lex-positive: the leading value strictly wins
                assert!(gap.iter().find(|&&g| g != 0).is_some_and(|&g| g > 0));
            }
        }
    }

    #[test]
    fn degeneration_entries_replay_the_products() {
        let spec = a(2);
        let word = vec![1, 2, 1];
        let module1 = build_hw_module(&spec, &[1, 0]).unwrap();
        let module2 = build_hw_module(&spec, &[2, 0]).unwrap();
        let ctx1 = ExpansionContext::new(&module1, &word).unwrap();
        let ctx2 = ExpansionContext::new(&module2, &word).unwrap();
        let family = degeneration_family(&spec, &word, &[1, 0], 2).unwrap();
        for e in &family.entries {
            let i = ctx1.adapted.params.iter().position(|p| *p == e.left.1).unwrap();
            let j = ctx1.adapted.params.iter().position(|p| *p == e.right.1).unwrap();
            let product = ctx1.basis_polys[i].mul(&ctx1.basis_polys[j]).unwrap();
            // rebuild from the recorded terms: leading plus lower
            let top = ctx2
                .adapted
                .params
                .iter()
                .position(|p| *p == e.leading.1)
                .unwrap();
            let mut rebuilt = ctx2.basis_polys[top].scale(&e.leading_coeff);
            for (value, c, _) in &e.lower {
                let m = ctx2.adapted.params.iter().position(|p| p == value).unwrap();
                rebuilt = rebuilt.add(&ctx2.basis_polys[m].scale(c)).unwrap();
            }
            assert_eq!(rebuilt, product);
        }
    }

    #[test]
    fn a2_section_sample_subducts_from_level_one() {
        let spec = a(2);
        let word = vec![1, 2, 1];
        let val = TermValuation::highest(3);
        let gens = valued_generators(
            &section_ring_sample(&spec, &word, &[1, 0], 1).unwrap(),
            &val,
        )
        .unwrap();
        assert_eq!(gens.len(), 3);
        let sample = section_ring_sample(&spec, &word, &[1, 0], 3).unwrap();
        assert_eq!(sample.len(), 3 + 6 + 10);
        for h in &sample {
            let trace = subduct(h, &gens, &val, DEFAULT_STEP_CAP).unwrap();
            assert!(trace.remainder.is_none());
            assert_eq!(trace.replay(&gens).unwrap(), *h);
        }
    }

    #[test]
    fn step_cap_reports_inconclusive() {
        let (val, gens) = xy_setup();
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        let h = GradedElement {
            level: 2,
            poly: x.pow(2).add(&y.pow(2)).unwrap(),
        };
        assert!(matches!(
            subduct(&h, &gens, &val, 1),
            Err(Error::SubductionInconclusive(1))
        ));
    }
}
