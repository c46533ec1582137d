//! Value semigroups, Newton-Okounkov bodies, string polytopes with exact
//! lattice counts and volumes, Hilbert-growth degree checks, and fibered
//! polytopes over multiplicity-free isotypic data.
//!
//! All bodies are finite-level hulls: a stabilization flag records whether
//! the last level added anything. For string value semigroups the level-1
//! slice already carries every vertex, so the flag certifies the limit.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hwmodule::build_hw_module;
use crate::linalg::Vector;
use crate::poly_val::GradedValue;
use crate::polytope::{in_hull, volume, RationalPolytope};
use crate::ratio::{rat, Rat};
use crate::rootdata::{RootSystemSpec, Weight};
use crate::strings::value_set;

// ---------------------------------------------------------------------------
// Value semigroups
// ---------------------------------------------------------------------------

/// A graded set of lattice values: the image of a graded algebra under a
/// valuation, sampled through some level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueSemigroup {
    /// Dimension of the lattice part (level excluded).
    pub ambient: usize,
    /// Sampled values (level, point) with level >= 1.
    pub points: BTreeSet<(u32, Vec<i64>)>,
    /// Declared generators, if any; purely informational.
    pub generators: Option<Vec<(u32, Vec<i64>)>>,
}

impl ValueSemigroup {
    pub fn new(ambient: usize, points: BTreeSet<(u32, Vec<i64>)>) -> Result<ValueSemigroup> {
        for (k, x) in &points {
            if x.len() != ambient {
                return Err(Error::ShapeMismatch(format!(
                    "semigroup point {:?} has {} coordinates, expected {ambient}",
                    x,
                    x.len()
                )));
            }
            if *k == 0 && x.iter().any(|&c| c != 0) {
                return Err(Error::NotAdditivelyClosed(
                    "level 0 may only contain the origin".into(),
                ));
            }
        }
        let points = points.into_iter().filter(|(k, _)| *k > 0).collect();
        Ok(ValueSemigroup { ambient, points, generators: None })
    }

    /// The string value semigroup of a weight ray: level k carries the
    /// parameter tuples of the module with highest weight k . lambda.
    pub fn from_string_values(
        spec: &RootSystemSpec,
        word: &[usize],
        lambda: &[i64],
        level_cap: u32,
    ) -> Result<ValueSemigroup> {
        if level_cap == 0 {
            return Err(Error::ShapeMismatch("level cap must be positive".into()));
        }
        let mut points = BTreeSet::new();
        for k in 1..=level_cap {
            let scaled: Weight = lambda.iter().map(|&x| x * k as i64).collect();
            let module = build_hw_module(spec, &scaled)?;
            for a in value_set(&module, word)?.points {
                points.insert((k, a.iter().map(|&x| x as i64).collect::<Vec<i64>>()));
            }
        }
        ValueSemigroup::new(spec.num_positive_roots(), points)
    }

    pub fn max_level(&self) -> u32 {
        self.points.iter().map(|(k, _)| *k).max().unwrap_or(0)
    }

    /// Verifies closure under addition for all pairs whose level sum stays
    /// within the sampled range.
    pub fn check_additive_closure(&self) -> Result<()> {
        let cap = self.max_level();
        for (k1, x1) in &self.points {
            for (k2, x2) in &self.points {
                let k = k1 + k2;
                if k > cap {
                    continue;
                }
                let sum: Vec<i64> = x1.iter().zip(x2).map(|(a, b)| a + b).collect();
                if !self.points.contains(&(k, sum.clone())) {
                    return Err(Error::NotAdditivelyClosed(format!(
                        "({k1}, {x1:?}) + ({k2}, {x2:?}) missing at level {k}"
                    )));
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Newton-Okounkov bodies
// ---------------------------------------------------------------------------

/// A finite-level Newton-Okounkov body: the hull of level-scaled semigroup
/// points, with a flag recording whether the top level changed the hull.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NokBody {
    pub body: RationalPolytope,
    pub level_cap: u32,
    pub stabilized: bool,
}

fn scaled_points(semigroup: &ValueSemigroup, cap: u32) -> Vec<Vector> {
    semigroup
        .points
        .iter()
        .filter(|(k, _)| *k <= cap)
        .map(|(k, x)| {
            let denom = Rat::from_integer(BigInt::from(*k));
            x.iter().map(|&c| rat(c) / denom.clone()).collect()
        })
        .collect()
}

/// Hull of the scaled semigroup points through `level_cap`.
pub fn nok_body(semigroup: &ValueSemigroup, level_cap: u32) -> Result<NokBody> {
    let points = scaled_points(semigroup, level_cap);
    if points.is_empty() {
        return Err(Error::Degenerate(
            "value semigroup has no points within the level cap".into(),
        ));
    }
    let body = RationalPolytope::from_points(semigroup.ambient, &points)?;
    let stabilized = if level_cap >= 2 {
        let previous = scaled_points(semigroup, level_cap - 1);
        !previous.is_empty()
            && RationalPolytope::from_points(semigroup.ambient, &previous)? == body
    } else {
        false
    };
    Ok(NokBody { body, level_cap, stabilized })
}

/// The string polytope of a dominant weight: the Newton-Okounkov body of
/// its string value semigroup. For caps >= 2 the hull must have stabilized
/// between the last two levels, certifying the body; otherwise the call
/// fails and the caller should raise the cap. Vertices of denominator d
/// need levels up to d to appear, so integral bodies certify at cap 2.
pub fn string_polytope(
    spec: &RootSystemSpec,
    word: &[usize],
    lambda: &[i64],
    level_cap: u32,
) -> Result<RationalPolytope> {
    let semigroup = ValueSemigroup::from_string_values(spec, word, lambda, level_cap)?;
    let nok = nok_body(&semigroup, level_cap)?;
    if level_cap >= 2 && !nok.stabilized {
        // legitimate for bodies with non-integral vertices: points of
        // denominator d only appear from level d on
        return Err(Error::HullNotStabilized(level_cap));
    }
    Ok(nok.body)
}

// ---------------------------------------------------------------------------
// Hilbert growth
// ---------------------------------------------------------------------------

/// Exact comparison of Hilbert growth with a polytope volume.
#[derive(Debug, Clone)]
pub struct DegreeReport {
    /// Degree of the fitted Hilbert polynomial.
    pub degree: usize,
    /// Leading coefficient of the fit.
    pub leading: Rat,
    /// degree! times the leading coefficient.
    pub scaled_leading: Rat,
    /// degree! times the polytope volume.
    pub scaled_volume: Rat,
    pub degree_matches_dimension: bool,
    pub volume_matches_growth: bool,
}

/// Fits the degree and leading coefficient of `hilbert` (values at k = 0,
/// 1, 2, ...) by exact finite differences and compares against the
/// polytope: the q-th difference of a degree-q polynomial is q! times its
/// leading coefficient.
pub fn degree_check(hilbert: &[u64], polytope: &RationalPolytope) -> Result<DegreeReport> {
    if hilbert.is_empty() {
        return Err(Error::InconsistentGrowth("no Hilbert values given".into()));
    }
    let mut row: Vec<Rat> = hilbert.iter().map(|&h| rat(h as i64)).collect();
    let mut degree = 0usize;
    loop {
        if row.len() < 2 {
            return Err(Error::InconsistentGrowth(format!(
                "need at least {} values to certify degree {degree}",
                degree + 2
            )));
        }
        if row.iter().all(|x| *x == row[0]) {
            break;
        }
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
        degree += 1;
    }
    let constant = row[0].clone();
    if constant.is_zero() && degree > 0 {
        return Err(Error::InconsistentGrowth(
            "difference table vanished before becoming constant".into(),
        ));
    }
    let mut dfact = Rat::one();
    for k in 2..=degree as i64 {
        dfact *= rat(k);
    }
    let leading = &constant / &dfact;
    let vol = volume(polytope)?;
    let scaled_volume = &vol * &dfact;
    Ok(DegreeReport {
        degree,
        leading,
        scaled_leading: constant.clone(),
        scaled_volume: scaled_volume.clone(),
        degree_matches_dimension: degree == polytope.dim,
        volume_matches_growth: constant == scaled_volume,
    })
}

// ---------------------------------------------------------------------------
// Isotypic data and fibered polytopes
// ---------------------------------------------------------------------------

/// Multiplicity-free isotypic data: the set of (level, dominant weight)
/// pairs carrying one irreducible component each, with declared moment
/// polytope vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotypicData {
    pub spec: RootSystemSpec,
    pub support: BTreeSet<(u32, Weight)>,
    pub moment_vertices: Vec<Vector>,
}

impl IsotypicData {
    pub fn new(
        spec: RootSystemSpec,
        support: BTreeSet<(u32, Weight)>,
        moment_vertices: Vec<Vector>,
    ) -> Result<IsotypicData> {
        if moment_vertices.is_empty() {
            return Err(Error::InvalidIsotypicData("no moment vertices declared".into()));
        }
        for (k, lambda) in &support {
            if *k == 0 {
                return Err(Error::InvalidIsotypicData(
                    "support must start at level 1".into(),
                ));
            }
            spec.check_dominant(lambda)?;
            let scaled: Vector = lambda
                .iter()
                .map(|&x| Rat::new(BigInt::from(x), BigInt::from(*k)))
                .collect();
            if !in_hull(&moment_vertices, &scaled) {
                return Err(Error::InvalidIsotypicData(format!(
                    "weight {lambda:?} at level {k} lies outside the declared moment polytope"
                )));
            }
        }
        Ok(IsotypicData { spec, support, moment_vertices })
    }

    /// Levels present in the support.
    pub fn max_level(&self) -> u32 {
        self.support.iter().map(|(k, _)| *k).max().unwrap_or(0)
    }

    /// Sum of irreducible dimensions at one level: the exact dimension of
    /// the level's section space.
    pub fn level_dimension(&self, k: u32) -> Result<u64> {
        let mut total = 0u64;
        for (level, lambda) in &self.support {
            if *level == k {
                total += self.spec.weyl_dim(lambda)?;
            }
        }
        Ok(total)
    }
}

/// Built-in toy datum: at level k, every weight m with 0 <= m <= k appears
/// once. Moment polytope [0, 1].
pub fn a1_interval_data(level_cap: u32) -> Result<IsotypicData> {
    let spec = RootSystemSpec::new(crate::rootdata::Family::A, 1)?;
    let mut support = BTreeSet::new();
    for k in 1..=level_cap {
        for m in 0..=k as i64 {
            support.insert((k, vec![m]));
        }
    }
    IsotypicData::new(spec, support, vec![vec![rat(0)], vec![rat(1)]])
}

/// Built-in flag-variety datum: level k carries exactly the weight
/// k . lambda. Moment polytope is the point lambda.
pub fn flag_ray_data(
    spec: &RootSystemSpec,
    lambda: &[i64],
    level_cap: u32,
) -> Result<IsotypicData> {
    spec.check_dominant(lambda)?;
    let mut support = BTreeSet::new();
    for k in 1..=level_cap {
        support.insert((k, lambda.iter().map(|&x| x * k as i64).collect::<Weight>()));
    }
    let vertex: Vector = lambda.iter().map(|&x| rat(x)).collect();
    IsotypicData::new(*spec, support, vec![vertex])
}

/// The weight valuation of an element with the given isotypic support:
/// the maximal (level, weight) pair, where lower levels dominate and ties
/// break toward the lex-larger weight.
pub fn weight_valuation(data: &IsotypicData, support: &[(u32, Weight)]) -> Result<GradedValue> {
    if support.is_empty() {
        return Err(Error::ZeroInput);
    }
    let mut best: Option<GradedValue> = None;
    for (k, lambda) in support {
        if !data.support.contains(&(*k, lambda.clone())) {
            return Err(Error::InvalidIsotypicData(format!(
                "component ({k}, {lambda:?}) is not in the isotypic support"
            )));
        }
        let value = GradedValue { level: *k, tail: lambda.clone() };
        best = Some(match best {
            None => value,
            Some(b) => b.max(value),
        });
    }
    Ok(best.expect("nonempty support"))
}

/// Hull of the level-scaled supported weights.
pub fn moment_body(data: &IsotypicData, level_cap: u32) -> Result<RationalPolytope> {
    let points: Vec<Vector> = data
        .support
        .iter()
        .filter(|(k, _)| *k <= level_cap)
        .map(|(k, lambda)| {
            lambda
                .iter()
                .map(|&x| Rat::new(BigInt::from(x), BigInt::from(*k)))
                .collect()
        })
        .collect();
    if points.is_empty() {
        return Err(Error::InvalidIsotypicData(
            "no supported weights within the level cap".into(),
        ));
    }
    RationalPolytope::from_points(data.spec.rank, &points)
}

/// The fibered polytope in weight-space times parameter-space: over each
/// scaled supported weight lambda/k sits the scaled string polytope
/// fiber, sampled as the value set of V_lambda divided by k.
pub fn fibered_polytope(
    data: &IsotypicData,
    word: &[usize],
    level_cap: u32,
) -> Result<RationalPolytope> {
    let rank = data.spec.rank;
    let n = data.spec.num_positive_roots();
    let mut points: Vec<Vector> = Vec::new();
    for (k, lambda) in &data.support {
        if *k > level_cap {
            continue;
        }
        let module = build_hw_module(&data.spec, lambda)?;
        let denom = Rat::from_integer(BigInt::from(*k));
        for a in value_set(&module, word)?.points {
            let mut point: Vector = Vec::with_capacity(rank + n);
            for &x in lambda {
                point.push(rat(x) / denom.clone());
            }
            for &x in &a {
                point.push(rat(x as i64) / denom.clone());
            }
            points.push(point);
        }
    }
    if points.is_empty() {
        return Err(Error::InvalidIsotypicData(
            "no supported weights within the level cap".into(),
        ));
    }
    RationalPolytope::from_points(rank + n, &points)
}

/// Independent count oracle for the fibered polytope: the total dimension
/// of the level-k isotypic pieces.
pub fn fibered_count_oracle(data: &IsotypicData, k: u32) -> Result<u64> {
    data.level_dimension(k)
}

// ---------------------------------------------------------------------------
