//! Sparse multivariate polynomials over `Q` and their term valuations.
//!
//! Values live in `Z^d` under lexicographic order. The highest-term
//! valuation negates the extremal exponent so that both valuations
//! satisfy the same `v(f+g) >= min` axioms under one fixed order.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ratio::{format_rat, parse_rat, Rat};

/// Value of a term valuation: an integer tuple under lex order.
pub type ValVector = Vec<i64>;

// ---------------------------------------------------------------------------
// MultiPoly
// ---------------------------------------------------------------------------

/// Sparse polynomial in `vars` variables with rational coefficients.
///
/// Terms are keyed by exponent vector; zero coefficients are never stored,
/// so the map order doubles as ascending lex order on exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    vars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

/// Serialized form: `{"vars": N, "terms": [{"exp": [...], "coef": "p/q"}]}`.
#[derive(Serialize, Deserialize)]
pub struct MultiPolyJson {
    pub vars: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coef: String,
}

impl MultiPoly {
    pub fn zero(vars: usize) -> Self {
        MultiPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: usize, c: Rat) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars], c);
        }
        p
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, Rat::from_integer(1.into()))
    }

    /// The variable `t_i`, 0-based.
    pub fn var(vars: usize, i: usize) -> Self {
        assert!(i < vars, "variable index out of range");
        let mut exp = vec![0; vars];
        exp[i] = 1;
        let mut p = Self::zero(vars);
        p.terms.insert(exp, Rat::from_integer(1.into()));
        p
    }

    /// Builds from raw terms, merging duplicates and dropping zeros.
    pub fn from_terms(vars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rat)>) -> Result<Self> {
        let mut p = Self::zero(vars);
        for (exp, c) in terms {
            if exp.len() != vars {
                return Err(Error::ShapeMismatch(format!(
                    "term exponent has {} entries, expected {vars}",
                    exp.len()
                )));
            }
            p.add_term(exp, c);
        }
        Ok(p)
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lex order of exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[u32]) -> Rat {
        self.terms.get(exp).cloned().unwrap_or_else(Rat::zero)
    }

    fn add_term(&mut self, exp: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &MultiPoly) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::ShapeMismatch(format!(
                "polynomials in {} and {} variables",
                self.vars, other.vars
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (exp, c) in &other.terms {
            out.add_term(exp.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (exp, c) in &other.terms {
            out.add_term(exp.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        MultiPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn neg(&self) -> MultiPoly {
        self.scale(&-Rat::from_integer(1.into()))
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(exp, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut out = Self::one(self.vars);
        for _ in 0..n {
            out = out.mul(self).expect("same variable count");
        }
        out
    }

    /// Formal partial derivative in variable `i`.
    pub fn partial_derivative(&self, i: usize) -> MultiPoly {
        let mut out = Self::zero(self.vars);
        for (exp, c) in &self.terms {
            if exp[i] == 0 {
                continue;
            }
            let mut e = exp.clone();
            e[i] -= 1;
            out.add_term(e, c * Rat::from_integer((exp[i] as i64).into()));
        }
        out
    }

    /// Restriction `t_i = 0`.
    pub fn set_var_zero(&self, i: usize) -> MultiPoly {
        let mut out = Self::zero(self.vars);
        for (exp, c) in &self.terms {
            if exp[i] == 0 {
                out.add_term(exp.clone(), c.clone());
            }
        }
        out
    }

    /// Degree in variable `i`; zero polynomial gives `None`.
    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum::<u32>()).max()
    }

    /// Extremal exponent under the variable priority: lex-largest when
    /// `highest`, lex-smallest otherwise. `None` on the zero polynomial.
    fn extremal_exponent(&self, order: &[usize], highest: bool) -> Option<&Vec<u32>> {
        let key = |e: &Vec<u32>| -> Vec<u32> { order.iter().map(|&i| e[i]).collect() };
        if highest {
            self.terms.keys().max_by_key(|e| key(e))
        } else {
            self.terms.keys().min_by_key(|e| key(e))
        }
    }

    pub fn to_json(&self) -> MultiPolyJson {
        MultiPolyJson {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(exp, c)| TermJson { exp: exp.clone(), coef: format_rat(c) })
                .collect(),
        }
    }

    pub fn from_json(json: &MultiPolyJson) -> Result<Self> {
        let mut terms = Vec::with_capacity(json.terms.len());
        for t in &json.terms {
            terms.push((t.exp.clone(), parse_rat(&t.coef)?));
        }
        Self::from_terms(json.vars, terms)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", format_rat(c))?;
            for (i, &e) in exp.iter().enumerate() {
                if e == 1 {
                    write!(f, "*t{}", i + 1)?;
                } else if e > 1 {
                    write!(f, "*t{}^{}", i + 1, e)?;
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Term valuations
// ---------------------------------------------------------------------------

/// Identity variable priority `t_1 > t_2 > ... > t_d`.
pub fn identity_order(vars: usize) -> Vec<usize> {
    (0..vars).collect()
}

fn check_order(order: &[usize], vars: usize) -> Result<()> {
    if order.len() != vars {
        return Err(Error::ShapeMismatch(format!(
            "variable order has {} entries, expected {vars}",
            order.len()
        )));
    }
    let mut seen = vec![false; vars];
    for &i in order {
        if i >= vars || seen[i] {
            return Err(Error::ShapeMismatch(format!("{order:?} is not a permutation")));
        }
        seen[i] = true;
    }
    Ok(())
}

/// Highest-term valuation: the negated lex-largest exponent, listed in
/// priority order. Errors on the zero polynomial.
pub fn highest_term_valuation(f: &MultiPoly, order: &[usize]) -> Result<ValVector> {
    check_order(order, f.vars())?;
    let exp = f.extremal_exponent(order, true).ok_or(Error::ZeroInput)?;
    Ok(order.iter().map(|&i| -(exp[i] as i64)).collect())
}

/// Lowest-term valuation: the lex-smallest exponent in priority order.
pub fn lowest_term_valuation(f: &MultiPoly, order: &[usize]) -> Result<ValVector> {
    check_order(order, f.vars())?;
    let exp = f.extremal_exponent(order, false).ok_or(Error::ZeroInput)?;
    Ok(order.iter().map(|&i| exp[i] as i64).collect())
}

/// Coefficient at the valuation-defining term.
pub fn extremal_coeff(f: &MultiPoly, order: &[usize], highest: bool) -> Result<(Vec<u32>, Rat)> {
    check_order(order, f.vars())?;
    let exp = f.extremal_exponent(order, highest).ok_or(Error::ZeroInput)?;
    Ok((exp.clone(), f.coeff(exp)))
}

// ---------------------------------------------------------------------------
// Graded extension
// ---------------------------------------------------------------------------

/// Value of a graded extension: degree plus the tail value of the top
/// graded piece. The order reverses the degree comparison:
/// `(k, x) > (l, y)` iff `k < l`, or `k = l` and `x > y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedValue {
    pub level: u32,
    pub tail: ValVector,
}

impl Ord for GradedValue {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other
            .level
            .cmp(&self.level)
            .then_with(|| self.tail.cmp(&other.tail))
    }
}

impl PartialOrd for GradedValue {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Extends a valuation to formal sums of graded pieces: the value of
/// `f = sum f_k` is `(s, v(f_s))` where `s` is the top degree present.
pub fn graded_extension<T>(
    pieces: &[(u32, T)],
    value: impl Fn(&T) -> Result<ValVector>,
) -> Result<GradedValue> {
    let mut top: Option<&(u32, T)> = None;
    for piece in pieces {
        match top {
            Some((lvl, _)) if *lvl == piece.0 => {
                return Err(Error::ShapeMismatch(format!(
                    "duplicate graded piece at degree {}",
                    piece.0
                )))
            }
            Some((lvl, _)) if *lvl > piece.0 => {}
            _ => top = Some(piece),
        }
    }
    let (level, elt) = top.ok_or(Error::ZeroInput)?;
    Ok(GradedValue { level: *level, tail: value(elt)? })
}

// ---------------------------------------------------------------------------
// Leaf reduction
// ---------------------------------------------------------------------------

/// Reduces a list of independent elements until their values are pairwise
/// distinct, subtracting scalar multiples of earlier-indexed elements from
/// later ones. Collision groups are processed in increasing value order.
///
/// `eliminate(keep, later)` must return `later - c * keep` for the unique
/// scalar that changes the value of `later`.
pub fn leaf_reduce<V: Clone>(
    items: &[V],
    value: impl Fn(&V) -> Result<ValVector>,
    eliminate: impl Fn(&V, &V) -> Result<V>,
) -> Result<(Vec<V>, Vec<ValVector>)> {
    let mut items: Vec<V> = items.to_vec();
    let mut values: Vec<ValVector> = items.iter().map(&value).collect::<Result<_>>()?;
    let cap = 1000 + 64 * items.len() * items.len();
    for _ in 0..cap {
        // Earliest-indexed representative of the smallest colliding value.
        let mut collision: Option<(usize, usize)> = None;
        for i in 0..items.len() {
            for j in i + 1..items.len() {
                if values[i] == values[j] {
                    let better = match collision {
                        None => true,
                        Some((bi, _)) => values[i] < values[bi],
                    };
                    if better {
                        collision = Some((i, j));
                    }
                }
            }
        }
        let Some((keep, later)) = collision else {
            return Ok((items, values));
        };
        let replaced = eliminate(&items[keep], &items[later])?;
        let new_value = value(&replaced)?;
        if new_value == values[later] {
            return Err(Error::LeafSeparation(format!(
                "elimination left value {:?} unchanged",
                new_value
            )));
        }
        items[later] = replaced;
        values[later] = new_value;
    }
    Err(Error::Internal("leaf reduction failed to terminate".into()))
}

/// Ready-made eliminator for term valuations: cancels the shared extremal
/// term of two polynomials with equal value.
pub fn term_eliminator(
    order: Vec<usize>,
    highest: bool,
) -> impl Fn(&MultiPoly, &MultiPoly) -> Result<MultiPoly> {
    move |keep: &MultiPoly, later: &MultiPoly| {
        let (e_keep, c_keep) = extremal_coeff(keep, &order, highest)?;
        let (e_later, c_later) = extremal_coeff(later, &order, highest)?;
        if e_keep != e_later {
            return Err(Error::LeafSeparation(
                "eliminator called on non-colliding polynomials".into(),
            ));
        }
        later.sub(&keep.scale(&(c_later / c_keep)))
    }
}

// ---------------------------------------------------------------------------
// Axiom checking
// ---------------------------------------------------------------------------

/// Outcome of a pre-valuation axiom sweep.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub checks: usize,
    pub violations: Vec<String>,
}

impl AxiomReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the pre-valuation axioms on every pair of samples:
/// scaling invariance, `v(f+g) >= min`, equality under distinct values,
/// and (when `multiplicative` is set) `v(fg) = v(f) + v(g)`.
///
/// The valuation is any map polynomials -> `Z^d`; violations are reported
/// as human-readable strings, so a deliberately broken "valuation" can be
/// used as a negative control.
pub fn check_prevaluation_axioms(
    samples: &[MultiPoly],
    value: impl Fn(&MultiPoly) -> Result<ValVector>,
    multiplicative: bool,
) -> Result<AxiomReport> {
    let mut report = AxiomReport { checks: 0, violations: Vec::new() };
    let nonzero: Vec<&MultiPoly> = samples.iter().filter(|f| !f.is_zero()).collect();
    let scalars = [crate::ratio::rat(2), crate::ratio::rat(-3), crate::ratio::ratio(7, 5)];
    for (idx, f) in nonzero.iter().enumerate() {
        let vf = value(f)?;
        for c in &scalars {
            report.checks += 1;
            let vcf = value(&f.scale(c))?;
            if vcf != vf {
                report
                    .violations
                    .push(format!("sample {idx}: v(c*f) = {vcf:?} differs from v(f) = {vf:?}"));
            }
        }
    }
    for i in 0..nonzero.len() {
        let vi = value(nonzero[i])?;
        for j in i + 1..nonzero.len() {
            let vj = value(nonzero[j])?;
            let sum = nonzero[i].add(nonzero[j])?;
            report.checks += 1;
            let min = vi.clone().min(vj.clone());
            if sum.is_zero() {
                // f + g = 0 carries no value; nothing to check.
                continue;
            }
            let vs = value(&sum)?;
            if vs < min {
                report.violations.push(format!(
                    "pair ({i},{j}): v(f+g) = {vs:?} below min {min:?}"
                ));
            }
            if vi != vj && vs != min {
                report.violations.push(format!(
                    "pair ({i},{j}): distinct values but v(f+g) = {vs:?} != min {min:?}"
                ));
            }
        }
    }
    if multiplicative {
        let n = nonzero.len();
        for i in 0..n {
            for offset in [1, n / 3 + 1] {
                let j = (i + offset) % n;
                if j == i {
                    continue;
                }
                report.checks += 1;
                let vi = value(nonzero[i])?;
                let vj = value(nonzero[j])?;
                let prod = nonzero[i].mul(nonzero[j])?;
                let vp = value(&prod)?;
                let expected: ValVector = vi.iter().zip(&vj).map(|(a, b)| a + b).collect();
                if vp != expected {
                    report.violations.push(format!(
                        "pair ({i},{j}): v(fg) = {vp:?} != v(f)+v(g) = {expected:?}"
                    ));
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::{rat, ratio};

    fn xy(vars: usize, pairs: &[(&[u32], i64)]) -> MultiPoly {
        MultiPoly::from_terms(
            vars,
            pairs.iter().map(|(e, c)| (e.to_vec(), rat(*c))),
        )
        .unwrap()
    }

    #[test]
    fn arithmetic_basics() {
        let f = xy(2, &[(&[1, 0], 1), (&[0, 1], 1)]); // x + y
        let g = xy(2, &[(&[1, 0], 1), (&[0, 1], -1)]); // x - y
        let prod = f.mul(&g).unwrap();
        assert_eq!(prod, xy(2, &[(&[2, 0], 1), (&[0, 2], -1)]));
        assert!(f.sub(&f).unwrap().is_zero());
        let sq = f.pow(2);
        assert_eq!(sq.coeff(&[1, 1]), rat(2));
    }

    #[test]
    fn derivative_and_restriction() {
        let f = xy(2, &[(&[2, 1], 3), (&[0, 2], 1)]); // 3x^2 y + y^2
        assert_eq!(f.partial_derivative(0), xy(2, &[(&[1, 1], 6)]));
        assert_eq!(f.set_var_zero(0), xy(2, &[(&[0, 2], 1)]));
        assert_eq!(f.degree_in(0), Some(2));
        assert_eq!(f.total_degree(), Some(3));
    }

    #[test]
    fn term_valuations_on_the_reference_polynomial() {
        // f = x^2 y + x y^3 with priority x > y.
        let f = xy(2, &[(&[2, 1], 1), (&[1, 3], 1)]);
        let order = identity_order(2);
        assert_eq!(highest_term_valuation(&f, &order).unwrap(), vec![-2, -1]);
        assert_eq!(lowest_term_valuation(&f, &order).unwrap(), vec![1, 3]);
        // Reversed priority y > x.
        assert_eq!(highest_term_valuation(&f, &[1, 0]).unwrap(), vec![-3, -1]);
        assert_eq!(lowest_term_valuation(&f, &[1, 0]).unwrap(), vec![1, 2]);
        assert!(matches!(
            highest_term_valuation(&MultiPoly::zero(2), &order),
            Err(Error::ZeroInput)
        ));
    }

    #[test]
    fn graded_value_order_reverses_degree() {
        let a = GradedValue { level: 1, tail: vec![0] };
        let b = GradedValue { level: 2, tail: vec![5] };
        assert!(a > b, "lower degree wins");
        let c = GradedValue { level: 1, tail: vec![1] };
        assert!(c > a, "same degree falls back to tail order");
    }

    #[test]
    fn graded_extension_picks_top_degree() {
        let order = identity_order(1);
        let pieces = vec![
            (0u32, MultiPoly::one(1)),
            (2u32, xy(1, &[(&[3], 2)])),
        ];
        let v = graded_extension(&pieces, |f| highest_term_valuation(f, &order)).unwrap();
        assert_eq!(v, GradedValue { level: 2, tail: vec![-3] });
        let empty: Vec<(u32, MultiPoly)> = Vec::new();
        assert!(graded_extension(&empty, |f| highest_term_valuation(f, &order)).is_err());
    }

    #[test]
    fn leaf_reduce_separates_colliding_pair() {
        // Under priority y > x the lowest terms of x and x + y coincide,
        // so the second element reduces to y in one elimination.
        let x = xy(2, &[(&[1, 0], 1)]);
        let x_plus_y = xy(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let order = vec![1, 0];
        let val = |f: &MultiPoly| lowest_term_valuation(f, &order);
        let (items, values) =
            leaf_reduce(&[x.clone(), x_plus_y.clone()], val, term_eliminator(order.clone(), false))
                .unwrap();
        assert_eq!(items[0], x);
        assert_eq!(items[1], xy(2, &[(&[0, 1], 1)]));
        assert_eq!(values, vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn leaf_reduce_keeps_already_distinct_input() {
        // Under priority x > y the same two elements already have
        // distinct lowest-term values and pass through unchanged.
        let x = xy(2, &[(&[1, 0], 1)]);
        let x_plus_y = xy(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let order = identity_order(2);
        let val = |f: &MultiPoly| lowest_term_valuation(f, &order);
        let (items, values) =
            leaf_reduce(&[x.clone(), x_plus_y.clone()], val, term_eliminator(order.clone(), false))
                .unwrap();
        assert_eq!(items, vec![x, x_plus_y]);
        assert_eq!(values, vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn axioms_hold_for_term_valuations() {
        let samples = vec![
            xy(2, &[(&[2, 1], 1), (&[1, 3], 1)]),
            xy(2, &[(&[2, 1], -4)]),
            xy(2, &[(&[0, 0], 1), (&[1, 0], 1)]),
            xy(2, &[(&[1, 1], 2), (&[0, 2], 5)]),
        ];
        let order = identity_order(2);
        let hi = check_prevaluation_axioms(
            &samples,
            |f| highest_term_valuation(f, &order),
            true,
        )
        .unwrap();
        assert!(hi.ok(), "{:?}", hi.violations);
        let lo = check_prevaluation_axioms(
            &samples,
            |f| lowest_term_valuation(f, &order),
            true,
        )
        .unwrap();
        assert!(lo.ok(), "{:?}", lo.violations);
    }

    #[test]
    fn degree_pseudo_valuation_fails_the_axioms() {
        // Total degree is not a pre-valuation: adding polynomials with
        // distinct degrees lands at the max, not the min.
        let samples = vec![
            xy(2, &[(&[1, 0], 1)]),
            xy(2, &[(&[2, 0], 1)]),
            xy(2, &[(&[1, 0], -1), (&[2, 0], -1)]),
        ];
        let fake = |f: &MultiPoly| -> Result<ValVector> {
            Ok(vec![f.total_degree().ok_or(Error::ZeroInput)? as i64])
        };
        let report = check_prevaluation_axioms(&samples, fake, false).unwrap();
        assert!(!report.ok());
    }

    #[test]
    fn multiplicativity_is_exact_on_a_fixed_pair() {
        let f = xy(2, &[(&[2, 1], 1), (&[1, 3], 1)]);
        let g = MultiPoly::from_terms(
            2,
            vec![(vec![1, 0], ratio(1, 2)), (vec![0, 1], rat(3))],
        )
        .unwrap();
        let order = identity_order(2);
        let vf = highest_term_valuation(&f, &order).unwrap();
        let vg = highest_term_valuation(&g, &order).unwrap();
        let vfg = highest_term_valuation(&f.mul(&g).unwrap(), &order).unwrap();
        let sum: ValVector = vf.iter().zip(&vg).map(|(a, b)| a + b).collect();
        assert_eq!(vfg, sum);
    }

    #[test]
    fn json_round_trip() {
        let f = MultiPoly::from_terms(
            3,
            vec![
                (vec![1, 0, 2], ratio(-3, 4)),
                (vec![0, 0, 0], rat(5)),
            ],
        )
        .unwrap();
        let json = f.to_json();
        let text = serde_json::to_string(&json).unwrap();
        let parsed: MultiPolyJson = serde_json::from_str(&text).unwrap();
        assert_eq!(MultiPoly::from_json(&parsed).unwrap(), f);
    }
}
