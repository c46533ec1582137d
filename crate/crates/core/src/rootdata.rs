//! Root systems of types A1-A4 and C2: Cartan data, Weyl group elements,
//! reduced words for the longest element, and the dimension formula.
//!
//! Weights are always stored in fundamental-weight coordinates, so the
//! simple roots are the columns of the Cartan matrix.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Simple Lie algebra family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    C,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::C => write!(f, "C"),
        }
    }
}

/// A supported root system: A1-A4 or C2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootSystemSpec {
    pub family: Family,
    pub rank: usize,
}

/// Weight in fundamental-weight coordinates.
pub type Weight = Vec<i64>;

/// Word in the simple reflections, 1-based indices.
pub type WeylWord = Vec<usize>;

/// Signed permutation realizing a Weyl group element.
///
/// `images[i]` is the image of basis index `i+1`; a negative entry means
/// the sign flips. Type A elements carry no negative entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    images: Vec<i64>,
}

impl RootSystemSpec {
    /// Validates the family/rank combination.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        match (family, rank) {
            (Family::A, 1..=4) | (Family::C, 2) => Ok(RootSystemSpec { family, rank }),
            _ => Err(Error::UnsupportedRootSystem(format!(
                "{family}{rank} (supported: A1-A4, C2)"
            ))),
        }
    }

    /// Number of positive roots; also the length of the longest element.
    pub fn num_positive_roots(&self) -> usize {
        match self.family {
            Family::A => self.rank * (self.rank + 1) / 2,
            Family::C => self.rank * self.rank,
        }
    }

    /// Dimension of the ambient permutation representation.
    fn ambient(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::C => self.rank,
        }
    }

    /// Cartan matrix `a[i][j] = <alpha_j, alpha_i^vee>`, 0-based.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let r = self.rank;
        let mut a = vec![vec![0i64; r]; r];
        for i in 0..r {
            a[i][i] = 2;
            if i + 1 < r {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        }
        if self.family == Family::C {
            // C2 short root alpha_1, long root alpha_2.
            a[0][1] = -2;
        }
        a
    }

    /// Simple root `alpha_i` (1-based) in fundamental-weight coordinates:
    /// column `i` of the Cartan matrix.
    pub fn simple_root(&self, i: usize) -> Result<Weight> {
        self.check_index(i)?;
        let a = self.cartan_matrix();
        Ok((0..self.rank).map(|row| a[row][i - 1]).collect())
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank {
            return Err(Error::InvalidWord(format!(
                "reflection index {i} out of range 1..={}",
                self.rank
            )));
        }
        Ok(())
    }

    /// Validates a word's index range.
    pub fn check_word(&self, word: &[usize]) -> Result<()> {
        for &i in word {
            self.check_index(i)?;
        }
        Ok(())
    }

    /// Validates shape and dominance of a weight.
    pub fn check_dominant(&self, lambda: &[i64]) -> Result<()> {
        if lambda.len() != self.rank {
            return Err(Error::InvalidWeight(format!(
                "weight has {} coordinates, expected {}",
                lambda.len(),
                self.rank
            )));
        }
        if lambda.iter().any(|&x| x < 0) {
            return Err(Error::InvalidWeight(format!("{lambda:?} is not dominant")));
        }
        Ok(())
    }

    /// Positive roots in ambient coordinates.
    fn positive_roots_ambient(&self) -> Vec<Vec<i64>> {
        let n = self.ambient();
        let mut roots = Vec::new();
        match self.family {
            Family::A => {
                for i in 0..n {
                    for j in i + 1..n {
                        let mut v = vec![0i64; n];
                        v[i] = 1;
                        v[j] = -1;
                        roots.push(v);
                    }
                }
            }
            Family::C => {
                for i in 0..n {
                    for j in i + 1..n {
                        let mut v = vec![0i64; n];
                        v[i] = 1;
                        v[j] = -1;
                        roots.push(v);
                        let mut w = vec![0i64; n];
                        w[i] = 1;
                        w[j] = 1;
                        roots.push(w);
                    }
                }
                for i in 0..n {
                    let mut v = vec![0i64; n];
                    v[i] = 2;
                    roots.push(v);
                }
            }
        }
        roots
    }

    /// Fundamental weights in ambient coordinates. For type A the choice
    /// is up to the trace part, which every root pairing ignores.
    fn fundamental_weights_ambient(&self) -> Vec<Vec<i64>> {
        let n = self.ambient();
        match self.family {
            Family::A => (1..=self.rank)
                .map(|k| (0..n).map(|j| if j < k { 1 } else { 0 }).collect())
                .collect(),
            Family::C => (1..=self.rank)
                .map(|k| (0..n).map(|j| if j < k { 1 } else { 0 }).collect())
                .collect(),
        }
    }

    /// `2(mu, alpha) / (alpha, alpha)` for ambient vectors.
    fn coroot_pairing(mu: &[i64], alpha: &[i64]) -> i64 {
        let dot: i64 = mu.iter().zip(alpha).map(|(a, b)| a * b).sum();
        let norm: i64 = alpha.iter().map(|x| x * x).sum();
        debug_assert_eq!((2 * dot) % norm, 0, "coroot pairing must be integral");
        2 * dot / norm
    }

    /// Identity element.
    pub fn identity(&self) -> WeylElement {
        WeylElement {
            images: (1..=self.ambient() as i64).collect(),
        }
    }

    /// Simple reflection `s_i`, 1-based.
    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        self.check_index(i)?;
        let mut e = self.identity();
        match self.family {
            Family::A => {
                e.images.swap(i - 1, i);
            }
            Family::C => {
                if i < self.rank {
                    e.images.swap(i - 1, i);
                } else {
                    e.images[self.rank - 1] = -e.images[self.rank - 1];
                }
            }
        }
        Ok(e)
    }

    /// Product of the simple reflections named by `word`, left to right.
    pub fn element_of_word(&self, word: &[usize]) -> Result<WeylElement> {
        self.check_word(word)?;
        let mut acc = self.identity();
        for &i in word {
            acc = acc.mul(&self.simple_reflection(i)?);
        }
        Ok(acc)
    }

    /// Coxeter length: positive roots sent to negative roots.
    pub fn length(&self, w: &WeylElement) -> usize {
        self.positive_roots_ambient()
            .iter()
            .filter(|alpha| {
                let img = w.apply_ambient(alpha);
                is_negative_root(&img)
            })
            .count()
    }

    /// The longest element.
    pub fn longest_element(&self) -> WeylElement {
        let n = self.ambient();
        match self.family {
            Family::A => WeylElement {
                images: (0..n).map(|i| (n - i) as i64).collect(),
            },
            Family::C => WeylElement {
                images: (1..=n as i64).map(|i| -i).collect(),
            },
        }
    }

    /// True when `word` is a reduced expression for its own product.
    pub fn is_reduced(&self, word: &[usize]) -> Result<bool> {
        let w = self.element_of_word(word)?;
        Ok(self.length(&w) == word.len())
    }

    /// All reduced words for the longest element, in lexicographic order.
    pub fn longest_element_words(&self) -> Vec<WeylWord> {
        let n = self.num_positive_roots();
        let w0 = self.longest_element();
        let mut out = Vec::new();
        let mut word = Vec::with_capacity(n);
        self.extend_words(&self.identity(), &mut word, n, &w0, &mut out);
        out
    }

    fn extend_words(
        &self,
        u: &WeylElement,
        word: &mut WeylWord,
        n: usize,
        w0: &WeylElement,
        out: &mut Vec<WeylWord>,
    ) {
        if word.len() == n {
            if u == w0 {
                out.push(word.clone());
            }
            return;
        }
        for i in 1..=self.rank {
            let s = self.simple_reflection(i).expect("index in range");
            let next = u.mul(&s);
            if self.length(&next) == word.len() + 1 {
                word.push(i);
                self.extend_words(&next, word, n, w0, out);
                word.pop();
            }
        }
    }

    /// Suffix elements `w_k = s_{i_k} ... s_{i_N}` for `k = 1..=N+1`;
    /// the final entry is the identity. Requires a reduced word.
    pub fn suffix_elements(&self, word: &[usize]) -> Result<Vec<WeylElement>> {
        if !self.is_reduced(word)? {
            return Err(Error::InvalidWord(format!("{word:?} is not reduced")));
        }
        let mut suffixes = vec![self.identity()];
        for &i in word.iter().rev() {
            let s = self.simple_reflection(i)?;
            let prev = suffixes.last().expect("nonempty");
            suffixes.push(s.mul(prev));
        }
        suffixes.reverse();
        Ok(suffixes)
    }

    /// Reflection action on a weight in fundamental coordinates:
    /// `s_i(x) = x - x_i * alpha_i`.
    pub fn reflect_weight(&self, i: usize, x: &[i64]) -> Result<Weight> {
        let alpha = self.simple_root(i)?;
        if x.len() != self.rank {
            return Err(Error::InvalidWeight(format!(
                "weight has {} coordinates, expected {}",
                x.len(),
                self.rank
            )));
        }
        let c = x[i - 1];
        Ok(x.iter().zip(&alpha).map(|(xi, ai)| xi - c * ai).collect())
    }

    /// Applies the product of `word` to a weight (rightmost letter first).
    pub fn word_action_on_weight(&self, word: &[usize], x: &[i64]) -> Result<Weight> {
        let mut v = x.to_vec();
        for &i in word.iter().rev() {
            v = self.reflect_weight(i, &v)?;
        }
        Ok(v)
    }

    /// One reduced word for the longest element, by greedy ascent in the
    /// weak order (every maximal ascending chain ends at the top).
    pub fn some_longest_word(&self) -> WeylWord {
        let n = self.num_positive_roots();
        let mut u = self.identity();
        let mut word = Vec::with_capacity(n);
        while word.len() < n {
            let i = (1..=self.rank)
                .find(|&i| {
                    let s = self.simple_reflection(i).expect("index in range");
                    self.length(&u.mul(&s)) == word.len() + 1
                })
                .expect("non-longest elements always have an ascent");
            u = u.mul(&self.simple_reflection(i).expect("index in range"));
            word.push(i);
        }
        word
    }

    /// Highest weight of the dual module: `-w_0(lambda)`.
    pub fn dual_weight(&self, lambda: &[i64]) -> Result<Weight> {
        let word = self.some_longest_word();
        let img = self.word_action_on_weight(&word, lambda)?;
        Ok(img.iter().map(|x| -x).collect())
    }

    /// Weyl dimension formula, exact.
    pub fn weyl_dim(&self, lambda: &[i64]) -> Result<u64> {
        self.check_dominant(lambda)?;
        let fw = self.fundamental_weights_ambient();
        let n = self.ambient();
        let mut lam_rho = vec![0i64; n];
        let mut rho = vec![0i64; n];
        for (k, w) in fw.iter().enumerate() {
            for j in 0..n {
                lam_rho[j] += (lambda[k] + 1) * w[j];
                rho[j] += w[j];
            }
        }
        let mut num: i128 = 1;
        let mut den: i128 = 1;
        for alpha in self.positive_roots_ambient() {
            num *= Self::coroot_pairing(&lam_rho, &alpha) as i128;
            den *= Self::coroot_pairing(&rho, &alpha) as i128;
        }
        debug_assert!(num % den == 0, "Weyl dimension must be integral");
        Ok((num / den) as u64)
    }

    /// All dominant weights with coordinate sum at most `max_sum`,
    /// lexicographically ordered.
    pub fn dominant_weights_up_to(&self, max_sum: i64) -> Vec<Weight> {
        let mut out = Vec::new();
        let mut cur = vec![0i64; self.rank];
        fn rec(pos: usize, left: i64, cur: &mut Weight, out: &mut Vec<Weight>) {
            if pos == cur.len() {
                out.push(cur.clone());
                return;
            }
            for v in 0..=left {
                cur[pos] = v;
                rec(pos + 1, left - v, cur, out);
            }
            cur[pos] = 0;
        }
        rec(0, max_sum, &mut cur, &mut out);
        out.sort();
        out
    }
}

impl WeylElement {
    /// Composition `self . other` (apply `other` first).
    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        let images = other
            .images
            .iter()
            .map(|&v| {
                let idx = v.unsigned_abs() as usize - 1;
                let img = self.images[idx];
                if v < 0 {
                    -img
                } else {
                    img
                }
            })
            .collect();
        WeylElement { images }
    }

    /// Image of an ambient vector.
    fn apply_ambient(&self, x: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; x.len()];
        for (i, &c) in x.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let v = self.images[i];
            let idx = v.unsigned_abs() as usize - 1;
            out[idx] += if v < 0 { -c } else { c };
        }
        out
    }

    /// Signed images, for display and tests.
    pub fn images(&self) -> &[i64] {
        &self.images
    }
}

/// A nonzero root vector is negative exactly when its first nonzero
/// coordinate is negative (true for the A and C ambient root lists).
fn is_negative_root(v: &[i64]) -> bool {
    for &c in v {
        if c != 0 {
            return c < 0;
        }
    }
    false
}
