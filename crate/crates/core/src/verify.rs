//! Deterministic randomized invariant suites, used by the `check` command.
//!
//! Each check runs over cases sorted by size, so the reported
//! counterexample is the smallest failing case that was sampled.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::evaluators::{harmonic, harmonic_star, stirling_first, QZetaEvaluator};
use crate::hopf::{antipode_map, convolve_product, deconcat, derivation_d, exp_rd, reduced_deconcat, Antipode};
use crate::lambda_series::{check_identity, Identity, LambdaLinComb};
use crate::scalars::{binomial, PolyScalar, Rational, Scalar};
use crate::series_maps::{psi, psi_oracle, FormalSeries, LinearWordMap, NamedSeries};
use crate::word_algebra::{Alphabet, LinComb, Letter, NcPoly, Product, Tensor, Word};

/// The available suites.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Algebra,
    Psi,
    Maps,
    Hopf,
    Lambda,
    Harmonic,
    QZeta,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Suite::Algebra, Suite::Psi, Suite::Maps, Suite::Hopf, Suite::Lambda, Suite::Harmonic, Suite::QZeta];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Psi => "psi",
            Suite::Maps => "maps",
            Suite::Hopf => "hopf",
            Suite::Lambda => "lambda",
            Suite::Harmonic => "harmonic",
            Suite::QZeta => "qzeta",
        }
    }

    /// Suites that fix their own alphabet and coefficient ring.
    pub fn is_self_contained(self) -> bool {
        matches!(self, Suite::Harmonic | Suite::QZeta)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Longest word (or total length of a tuple of words) examined.
    pub maxlen: usize,
    /// Number of random cases per sampled check.
    pub samples: usize,
    pub seed: u64,
    /// Largest letter index used when generating words.
    pub max_index: u32,
    /// λ-truncation for the identity suite.
    pub trunc: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { maxlen: 5, samples: 60, seed: 0, max_index: 3, trunc: 4 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckResult {
    pub name: String,
    pub cases: usize,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub results: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.counterexample.is_none())
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| r.counterexample.is_some())
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            match &r.counterexample {
                None => writeln!(f, "ok    {}: {} ({} cases)", self.suite, r.name, r.cases)?,
                Some(c) => writeln!(f, "FAIL  {}: {} counterexample {c}", self.suite, r.name)?,
            }
        }
        Ok(())
    }
}

/// A tuple of words, displayed `(u, v)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Words(pub Vec<Word>);

impl Words {
    fn size(&self) -> usize {
        self.0.iter().map(Word::len).sum()
    }
}

impl fmt::Display for Words {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Word::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn run_cases<C: fmt::Display>(
    name: impl Into<String>,
    mut cases: Vec<C>,
    size: impl Fn(&C) -> usize,
    holds: impl Fn(&C) -> Result<bool>,
) -> Result<CheckResult> {
    cases.sort_by_key(|c| size(c));
    let n = cases.len();
    for c in &cases {
        if !holds(c)? {
            return Ok(CheckResult { name: name.into(), cases: n, counterexample: Some(c.to_string()) });
        }
    }
    Ok(CheckResult { name: name.into(), cases: n, counterexample: None })
}

fn word_cases(words: &[Word]) -> Vec<Words> {
    words.iter().map(|w| Words(vec![w.clone()])).collect()
}

fn by_size(w: &Words) -> usize {
    w.size()
}

/// Seeded generator of words and series.
pub struct Sampler {
    rng: ChaCha8Rng,
    letters: Vec<Letter>,
}

impl Sampler {
    pub fn new<R>(alphabet: &Alphabet<R>, max_index: u32, seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), letters: alphabet.letter_sample(max_index) }
    }

    pub fn word(&mut self, max_len: usize) -> Word {
        let len = self.rng.gen_range(0..=max_len);
        (0..len).map(|_| *self.letters.choose(&mut self.rng).expect("nonempty alphabet")).collect()
    }

    /// `k` words of total length at most `max_total`.
    pub fn tuple(&mut self, k: usize, max_total: usize) -> Words {
        let mut budget = max_total;
        let mut out = Vec::with_capacity(k);
        for _ in 0..k {
            let w = self.word(budget);
            budget -= w.len();
            out.push(w);
        }
        out.shuffle(&mut self.rng);
        Words(out)
    }

    pub fn tuples(&mut self, k: usize, max_total: usize, count: usize) -> Vec<Words> {
        (0..count).map(|_| self.tuple(k, max_total)).collect()
    }

    /// A small rational `p/q` with `|p| <= 3`, `1 <= q <= 3`.
    pub fn rational(&mut self) -> Rational {
        let p: i64 = self.rng.gen_range(-3..=3);
        let q: i64 = self.rng.gen_range(1..=3);
        Rational::new(p, q).expect("q > 0")
    }

    /// A series of the given order with small rational coefficients and
    /// nonzero linear term.
    pub fn series<R: Scalar>(&mut self, order: usize) -> FormalSeries<R> {
        let mut coeffs: Vec<R> = (0..order).map(|_| R::from_rational(self.rational())).collect();
        if coeffs[0].is_zero() {
            coeffs[0] = R::one();
        }
        FormalSeries::new(coeffs).expect("order >= 1")
    }
}

fn word_poly<R: Scalar>(w: &Word) -> NcPoly<R> {
    NcPoly::word(w.clone())
}

/// Runs `suite` over `alphabet`. Self-contained suites ignore the alphabet.
pub fn run_suite<R: Scalar>(suite: Suite, alphabet: &Alphabet<R>, config: &SuiteConfig) -> Result<SuiteReport> {
    let results = match suite {
        Suite::Algebra => algebra_suite(alphabet, config)?,
        Suite::Psi => psi_suite(alphabet, config)?,
        Suite::Maps => maps_suite(alphabet, config)?,
        Suite::Hopf => hopf_suite(alphabet, config)?,
        Suite::Lambda => lambda_suite(alphabet, config)?,
        Suite::Harmonic => harmonic_suite(config)?,
        Suite::QZeta => qzeta_suite(config)?,
    };
    Ok(SuiteReport { suite, results })
}

/// Commutativity, associativity and units for `*` and `⋆`; on the zero
/// alphabet `*` must also equal the shuffle.
pub fn algebra_suite<R: Scalar>(alphabet: &Alphabet<R>, config: &SuiteConfig) -> Result<Vec<CheckResult>> {
    let mut s = Sampler::new(alphabet, config.max_index, config.seed);
    let pairs = s.tuples(2, config.maxlen, config.samples);
    let triples = s.tuples(3, config.maxlen, config.samples);
    let mut out = Vec::new();
    for mode in [Product::Qsh, Product::Star] {
        let prod = |x: &NcPoly<R>, y: &NcPoly<R>| alphabet.product(mode, x, y);
        out.push(run_cases(format!("{mode} commutative"), pairs.clone(), by_size, |c| {
            let (u, v) = (word_poly(&c.0[0]), word_poly(&c.0[1]));
            Ok(prod(&u, &v) == prod(&v, &u))
        })?);
        out.push(run_cases(format!("{mode} associative"), triples.clone(), by_size, |c| {
            let (u, v, w) = (word_poly(&c.0[0]), word_poly(&c.0[1]), word_poly(&c.0[2]));
            Ok(prod(&prod(&u, &v), &w) == prod(&u, &prod(&v, &w)))
        })?);
        out.push(run_cases(format!("{mode} unit"), pairs.clone(), by_size, |c| {
            let u = word_poly(&c.0[0]);
            Ok(prod(&u, &NcPoly::one()) == u && prod(&NcPoly::one(), &u) == u)
        })?);
    }
    if matches!(alphabet, Alphabet::Zero) {
        out.push(run_cases("zero alphabet gives the shuffle", pairs.clone(), by_size, |c| {
            let (u, v) = (word_poly(&c.0[0]), word_poly(&c.0[1]));
            Ok(alphabet.qsh(&u, &v) == alphabet.shuffle(&u, &v) && alphabet.qsh_star(&u, &v) == alphabet.shuffle(&u, &v))
        })?);
    }
    out.push(run_cases("shuffle commutative", pairs, by_size, |c| {
        let (u, v) = (word_poly(&c.0[0]), word_poly(&c.0[1]));
        Ok(alphabet.shuffle(&u, &v) == alphabet.shuffle(&v, &u))
    })?);
    Ok(out)
}

/// A series pair and a word, for functoriality checks.
struct SeriesCase<R> {
    f: FormalSeries<R>,
    g: FormalSeries<R>,
    w: Word,
}

impl<R: Scalar> fmt::Display for SeriesCase<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f = {}, g = {}, w = {}", self.f, self.g, self.w)
    }
}

/// `Ψ_f` against the composition-sum oracle, and `Ψ_f Ψ_g = Ψ_{f∘g}`.
pub fn psi_suite<R: Scalar>(alphabet: &Alphabet<R>, config: &SuiteConfig) -> Result<Vec<CheckResult>> {
    let mut s = Sampler::new(alphabet, config.max_index, config.seed);
    let order = config.maxlen.max(1);
    let cases: Vec<SeriesCase<R>> = (0..config.samples)
        .map(|_| SeriesCase { f: s.series(order), g: s.series(order), w: s.word(config.maxlen) })
        .collect();
    let size = |c: &SeriesCase<R>| c.w.len();
    let oracle = run_cases("psi = psi_oracle", cases, size, |c| {
        Ok(psi(alphabet, &c.f, &word_poly(&c.w))? == psi_oracle(alphabet, &c.f, &word_poly(&c.w))?)
    })?;
    let cases: Vec<SeriesCase<R>> = (0..config.samples)
        .map(|_| SeriesCase { f: s.series(order), g: s.series(order), w: s.word(config.maxlen) })
        .collect();
    let functorial = run_cases("Ψ_f∘Ψ_g = Ψ_(f∘g)", cases, size, |c| {
        let x = word_poly(&c.w);
        let lhs = psi(alphabet, &c.f, &psi(alphabet, &c.g, &x)?)?;
        Ok(lhs == psi(alphabet, &c.f.compose(&c.g)?, &x)?)
    })?;
    let identity = run_cases("Ψ_t = id", word_cases(&all_words(alphabet, config)), by_size, |c| {
        let x = word_poly(&c.0[0]);
        Ok(psi(alphabet, &FormalSeries::identity(order)?, &x)? == x)
    })?;
    Ok(vec![oracle, functorial, identity])
}

fn all_words<R>(alphabet: &Alphabet<R>, config: &SuiteConfig) -> Vec<Word> {
    let max_index = match alphabet {
        Alphabet::Euler { .. } => 1,
        _ => config.max_index.min(2),
    };
    Word::all_up_to(&alphabet.letter_sample(max_index), config.maxlen)
}

fn maps_agree<R: Scalar>(
    name: impl Into<String>,
    a: &LinearWordMap<R>,
    b: &LinearWordMap<R>,
    words: &[Word],
) -> Result<CheckResult> {
    run_cases(name, word_cases(words), by_size, |c| Ok(a.apply_word(&c.0[0])? == b.apply_word(&c.0[0])?))
}

fn rat<R: Scalar>(s: &str) -> R {
    R::from_rational(s.parse().expect("rational literal"))
}

/// Identities among `T`, `Σ`, `exp`, `log`, `H_p`, `R` and the products.
pub fn maps_suite<R: Scalar>(alphabet: &Alphabet<R>, config: &SuiteConfig) -> Result<Vec<CheckResult>> {
    let words = all_words(alphabet, config);
    let t = LinearWordMap::<R>::t();
    let sigma = LinearWordMap::sigma(alphabet);
    let id = LinearWordMap::identity();
    let r = LinearWordMap::reverse();
    let mut out = vec![
        maps_agree("T² = id", &t.compose(&t), &id, &words)?,
        maps_agree("TΣT = Σ^-1", &LinearWordMap::chain(&[t.clone(), sigma.clone(), t.clone()]), &LinearWordMap::sigma_inverse(alphabet), &words)?,
        maps_agree(
            "Σ = exp T log T",
            &sigma,
            &LinearWordMap::chain(&[LinearWordMap::exp(alphabet), t.clone(), LinearWordMap::log(alphabet), t.clone()]),
            &words,
        )?,
    ];
    let params = ["1", "-1", "1/2"];
    for a in params {
        for b in params {
            let (a, b): (R, R) = (rat(a), rat(b));
            let lhs = LinearWordMap::sigma_power(alphabet, a.clone()).compose(&LinearWordMap::sigma_power(alphabet, b.clone()));
            let rhs = LinearWordMap::sigma_power(alphabet, a.clone() + b.clone());
            out.push(maps_agree(format!("Σ^({a})Σ^({b}) = Σ^({})", a.clone() + b.clone()), &lhs, &rhs, &words)?);
        }
    }
    for (p, q) in [("2", "3"), ("-1", "1/2"), ("1/2", "-2")] {
        let (p, q): (R, R) = (rat(p), rat(q));
        let lhs = LinearWordMap::hp(alphabet, p.clone()).compose(&LinearWordMap::hp(alphabet, q.clone()));
        let rhs = LinearWordMap::hp(alphabet, p.clone() * q.clone());
        out.push(maps_agree(format!("H_({p})H_({q}) = H_({})", p.clone() * q.clone()), &lhs, &rhs, &words)?);
    }
    let mut s = Sampler::new(alphabet, config.max_index, config.seed);
    let pairs = s.tuples(2, config.maxlen, config.samples);
    let hom = |name: String, m: LinearWordMap<R>, from: Product, to: Product| {
        run_cases(name, pairs.clone(), by_size, move |c| {
            let (u, v) = (word_poly(&c.0[0]), word_poly(&c.0[1]));
            let lhs = m.apply(&alphabet.product(from, &u, &v))?;
            Ok(lhs == alphabet.product(to, &m.apply(&u)?, &m.apply(&v)?))
        })
    };
    out.push(hom("T(u*v) = Tu⋆Tv".into(), t.clone(), Product::Qsh, Product::Star)?);
    out.push(hom("Σ(u⋆v) = Σu*Σv".into(), sigma.clone(), Product::Star, Product::Qsh)?);
    let p: R = rat("3/2");
    out.push(hom(format!("H_({p})(u*v) = H_pu*H_pv"), LinearWordMap::hp(alphabet, p), Product::Qsh, Product::Qsh)?);
    out.push(hom("R(u*v) = Ru*Rv".into(), r.clone(), Product::Qsh, Product::Qsh)?);
    out.push(hom("R(u⋆v) = Ru⋆Rv".into(), r.clone(), Product::Star, Product::Star)?);
    for f in [NamedSeries::Sigma, NamedSeries::Exp, NamedSeries::Log] {
        let m = LinearWordMap::named(alphabet, f.clone());
        out.push(maps_agree(format!("RΨ_f = Ψ_fR for f = {f}"), &r.compose(&m), &m.compose(&r), &words)?);
    }
    Ok(out)
}

/// `(Δ⊗id)Δ` and `(id⊗Δ)Δ` on a word, as multisets of triples.
fn coassociative(w: &Word) -> bool {
    let mut left: BTreeMap<(Word, Word, Word), usize> = BTreeMap::new();
    let mut right = BTreeMap::new();
    for (a, b) in w.splits() {
        for (u, v) in a.splits() {
            *left.entry((u, v, b.clone())).or_insert(0) += 1;
        }
        for (v, x) in b.splits() {
            *right.entry((a.clone(), v, x)).or_insert(0) += 1;
        }
    }
    left == right
}

/// The bialgebra and Hopf structure: coproduct, antipodes, the
/// infinitesimal structure for `⋄` and the derivation `D`.
pub fn hopf_suite<R: Scalar>(alphabet: &Alphabet<R>, config: &SuiteConfig) -> Result<Vec<CheckResult>> {
    let words = all_words(alphabet, config);
    let mut s = Sampler::new(alphabet, config.max_index, config.seed);
    let pairs = s.tuples(2, config.maxlen, config.samples);
    let mut out = vec![run_cases("Δ coassociative", word_cases(&words), by_size, |c| Ok(coassociative(&c.0[0])))?];
    for mode in [Product::Qsh, Product::Star] {
        out.push(run_cases(format!("Δ is a {mode}-algebra map"), pairs.clone(), by_size, |c| {
            let (u, v) = (word_poly(&c.0[0]), word_poly(&c.0[1]));
            let lhs = deconcat(&alphabet.product(mode, &u, &v));
            Ok(lhs == alphabet.tensor_product(mode, &deconcat(&u), &deconcat(&v)))
        })?);
    }
    let id = LinearWordMap::identity();
    let unit = LinearWordMap::unit_counit();
    for (which, mode) in [(Antipode::Qsh, Product::Qsh), (Antipode::Star, Product::Star)] {
        let s = antipode_map(alphabet, which);
        out.push(maps_agree(format!("S ⊙ id = ηε for {mode}"), &convolve_product(alphabet, mode, &s, &id), &unit, &words)?);
        out.push(maps_agree(format!("id ⊙ S = ηε for {mode}"), &convolve_product(alphabet, mode, &id, &s), &unit, &words)?);
    }
    let s_qsh = antipode_map(alphabet, Antipode::Qsh);
    let s_star = antipode_map(alphabet, Antipode::Star);
    let sigma = LinearWordMap::sigma(alphabet);
    out.push(maps_agree("S_* S_⋆ = Σ²", &s_qsh.compose(&s_star), &sigma.compose(&sigma), &words)?);
    out.push(run_cases("Δ̃(u⋄v) = (u⋄v1)⊗v2 + u1⊗(u2⋄v)", pairs.clone(), by_size, |c| {
        let (u, v) = (word_poly::<R>(&c.0[0]), word_poly::<R>(&c.0[1]));
        let lhs = reduced_deconcat(&alphabet.diamond_extend(&u, &v));
        let mut rhs = Tensor::zero();
        for ((v1, v2), k) in reduced_deconcat(&v).terms() {
            rhs += Tensor::outer(&alphabet.diamond_extend(&u, &word_poly(v1)), &word_poly(v2)).scale(k);
        }
        for ((u1, u2), k) in reduced_deconcat(&u).terms() {
            rhs += Tensor::outer(&word_poly(u1), &alphabet.diamond_extend(&word_poly(u2), &v)).scale(k);
        }
        Ok(lhs == rhs)
    })?);
    let s_dia = antipode_map(alphabet, Antipode::Diamond);
    out.push(run_cases("S_⋄ = -Σ^-1 is the ⋄-antipode", word_cases(&words), by_size, |c| {
        let w = word_poly::<R>(&c.0[0]);
        let base = s_dia.apply(&w)? + w.clone();
        let mut left = base.clone();
        let mut right = base;
        for ((w1, w2), k) in reduced_deconcat(&w).terms() {
            left += alphabet.diamond_extend(&s_dia.apply_word(w1)?, &word_poly(w2)).scale(k);
            right += alphabet.diamond_extend(&word_poly(w1), &s_dia.apply_word(w2)?).scale(k);
        }
        Ok(left.is_zero() && right.is_zero())
    })?);
    out.push(run_cases("D is a ⋄-derivation", pairs.clone(), by_size, |c| {
        let (u, v) = (word_poly::<R>(&c.0[0]), word_poly::<R>(&c.0[1]));
        let lhs = derivation_d(alphabet, &alphabet.diamond_extend(&u, &v));
        let rhs = alphabet.diamond_extend(&derivation_d(alphabet, &u), &v)
            + alphabet.diamond_extend(&u, &derivation_d(alphabet, &v));
        Ok(lhs == rhs)
    })?);
    for rho in ["2", "-1/2", "1/3"] {
        let rho: R = rat(rho);
        let sr = LinearWordMap::sigma_power(alphabet, rho.clone());
        out.push(run_cases(format!("Σ^({rho}) = e^(({rho})D)"), word_cases(&words), by_size, |c| {
            let w = word_poly(&c.0[0]);
            Ok(sr.apply(&w)? == exp_rd(alphabet, &rho, &w))
        })?);
    }
    Ok(out)
}

/// An identity and its label, for the lambda suite.
struct IdentityCase<R> {
    label: String,
    identity: Identity<R>,
    order: usize,
}

impl<R> fmt::Display for IdentityCase<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} to λ^{}", self.label, self.order)
    }
}

/// The generating-function identity catalog on the first letters of the
/// alphabet.
pub fn lambda_suite<R: Scalar>(alphabet: &Alphabet<R>, config: &SuiteConfig) -> Result<Vec<CheckResult>> {
    let letters = alphabet.letter_sample(2);
    let (a, b) = (letters[0], letters[letters.len() - 1]);
    let lc = |x: Letter| LinComb::<R>::letter(x);
    let z = |x: Letter| LambdaLinComb::from(lc(x));
    let n = config.trunc.max(1);
    let mut cases: Vec<IdentityCase<R>> = Vec::new();
    let mut push = |label: String, identity: Identity<R>, order: usize| cases.push(IdentityCase { label, identity, order });
    for f in [NamedSeries::Log, NamedSeries::Exp, NamedSeries::Sigma] {
        push(format!("ihafid f = {f}, z = {b}"), Identity::Ihafid { f: f.series(n)?, z: z(b) }, n);
    }
    push(format!("expthm z = {b}"), Identity::Expthm { z: z(b) }, n);
    push(format!("ikz-remark z = {a}"), Identity::IkzRemark { z: z(a) }, n);
    for p in ["2", "3", "-1"] {
        push(format!("hpow p = {p}"), Identity::Hpow { p: rat(p), z: z(a) }, n);
    }
    push("psifinv p = 2, f = log(1+t)".into(), Identity::Psifinv { p: rat("2"), f: NamedSeries::Log.series(n)?, z: z(a) }, n);
    for sv in ["0", "1/2", "1", "2"] {
        push(format!("siinv s = {sv}"), Identity::Siinv { s: rat(sv), z: z(b) }, n);
    }
    push(format!("frprod y = {a}, z = {b}"), Identity::Frprod { y: z(a), z: z(b) }, n);
    for r in ["0", "1", "1/2"] {
        push(format!("repr r = {r}"), Identity::Repr { r: rat(r), z: z(a) }, n);
    }
    push(format!("dblfrac a = {b}, b = {a}"), Identity::Dblfrac { a: lc(b), b: lc(a) }, n.min(3));
    for mode in [Product::Qsh, Product::Star] {
        push(format!("expsum {mode}"), Identity::Expsum { mode, w: z(a), v: z(b) }, n);
    }
    let results = cases
        .iter()
        .map(|c| {
            let report = check_identity(alphabet, &c.identity, c.order)?;
            Ok(CheckResult {
                name: c.to_string(),
                cases: 1,
                counterexample: (!report.passed()).then(|| report.to_string()),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(results)
}

/// Finite harmonic sums: homomorphism properties, the Stirling formula and
/// the bridge `S(w) = A(Σ w)`.
pub fn harmonic_suite(config: &SuiteConfig) -> Result<Vec<CheckResult>> {
    let z = Alphabet::<Rational>::Z;
    let mut s = Sampler::new(&z, config.max_index, config.seed);
    let pairs = s.tuples(2, config.maxlen.min(4), config.samples);
    let ns: Vec<u64> = (1..=6).collect();
    let sum = |x: &NcPoly<Rational>, n: u64, star: bool| -> Result<Rational> {
        let mut acc = Rational::from(0);
        for (w, c) in x.terms() {
            let v = if star { harmonic_star(w, n)? } else { harmonic(w, n)? };
            acc = acc + c.clone() * v;
        }
        Ok(acc)
    };
    let mut out = Vec::new();
    for (mode, star) in [(Product::Qsh, false), (Product::Star, true)] {
        out.push(run_cases(format!("harmonic sums are {mode}-homomorphisms"), pairs.clone(), by_size, |c| {
            let (u, v) = (word_poly(&c.0[0]), word_poly(&c.0[1]));
            let prod = z.product(mode, &u, &v);
            for &n in &ns {
                if sum(&prod, n, star)? != sum(&u, n, star)? * sum(&v, n, star)? {
                    return Ok(false);
                }
            }
            Ok(true)
        })?);
    }
    let stirling: Vec<(u64, usize)> = (1..=8u64).flat_map(|n| (0..=n as usize).map(move |r| (n, r))).collect();
    out.push(run_cases("A_{1^r}(n) = s(n+1, r+1)/n!", stirling.into_iter().map(Pair).collect(), |p| p.0 .0 as usize, |p| {
        let (n, r) = p.0;
        let lhs = harmonic(&Word::from_indices(&vec![1; r]), n)?;
        let s = stirling_first(n as usize + 1, r + 1)?;
        let rhs = Rational::new(num_bigint::BigInt::from(s), 1)? / Rational::factorial(n as usize);
        Ok(lhs == rhs)
    })?);
    let sigma = LinearWordMap::sigma(&z);
    let words = Word::all_up_to(&z.letter_sample(config.max_index), config.maxlen.min(4));
    out.push(run_cases("S(w) = A(Σw)", word_cases(&words), by_size, |c| {
        let w = &c.0[0];
        let sw = sigma.apply_word(w)?;
        for &n in &ns {
            if harmonic_star(w, n)? != sum(&sw, n, false)? {
                return Ok(false);
            }
        }
        Ok(true)
    })?);
    Ok(out)
}

/// A displayable pair.
struct Pair<A, B>((A, B));

impl<A: fmt::Display, B: fmt::Display> fmt::Display for Pair<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0 .0, self.0 .1)
    }
}

/// Words of `H_q^0` with weight `<= max_weight`, each letter index `<= 3`.
pub fn admissible_words(max_weight: u32) -> Vec<Word> {
    let letters: Vec<Letter> = (1..=max_weight.min(5)).map(Letter::z).collect();
    Word::all_up_to(&letters, max_weight as usize)
        .into_iter()
        .filter(|w| w.weight() <= max_weight && w.first().map_or(true, |a| a.index >= 2))
        .collect()
}

/// The closed form `z_k^{⋄i} = sum_j binom(i-1, j) eps^j z_{ik-j}`.
pub fn q_diamond_power_closed_form(k: u32, i: u32) -> LinComb<PolyScalar> {
    let eps = PolyScalar::var("eps");
    let mut out = LinComb::zero();
    for j in 0..i {
        let c = PolyScalar::constant(binomial(&Rational::from((i - 1) as i64), j as usize)) * eps.pow(j);
        out.add_term(Letter::z(i * k - j), c);
    }
    out
}

/// Multiple q-zeta values: homomorphism properties modulo `q^(trunc+1)`
/// and the closed form of `z_k^{⋄i}`.
pub fn qzeta_suite(config: &SuiteConfig) -> Result<Vec<CheckResult>> {
    let order = config.trunc.max(1) * 2;
    let e = QZetaEvaluator::new(order)?;
    let a = e.alphabet();
    let words = admissible_words(4);
    let mut pairs: Vec<Words> = Vec::new();
    for u in &words {
        for v in &words {
            if !u.is_empty() && !v.is_empty() && u.weight() + v.weight() <= 5 && u <= v {
                pairs.push(Words(vec![u.clone(), v.clone()]));
            }
        }
    }
    let mut out = Vec::new();
    out.push(run_cases("ζ_q(u*v) = ζ_q(u)ζ_q(v)", pairs.clone(), by_size, |c| {
        let (u, v) = (&c.0[0], &c.0[1]);
        let lhs = e.eval(&a.qsh(&NcPoly::word(u.clone()), &NcPoly::word(v.clone())))?;
        Ok(lhs == e.qzeta(u)?.try_mul(&e.qzeta(v)?)?)
    })?);
    out.push(run_cases("ζ_q⋆(u⋆v) = ζ_q⋆(u)ζ_q⋆(v)", pairs, by_size, |c| {
        let (u, v) = (&c.0[0], &c.0[1]);
        let lhs = e.eval_star(&a.qsh_star(&NcPoly::word(u.clone()), &NcPoly::word(v.clone())))?;
        Ok(lhs == e.qzeta_star(u)?.try_mul(&e.qzeta_star(v)?)?)
    })?);
    out.push(run_cases("ζ_q⋆(w) = ζ_q(Σw)", word_cases(&words), by_size, |c| {
        Ok(e.qzeta_star(&c.0[0])? == e.qzeta_star_via_sigma(&c.0[0])?)
    })?);
    let sym = Alphabet::q_symbolic();
    let ks: Vec<Pair<u32, u32>> = (1..=4).flat_map(|k| (1..=6).map(move |i| Pair((k, i)))).collect();
    out.push(run_cases("z_k^{⋄i} closed form", ks, |p| p.0 .1 as usize, |p| {
        let (k, i) = p.0;
        Ok(sym.diamond_power(&LinComb::letter(Letter::z(k)), i as usize) == q_diamond_power_closed_form(k, i))
    })?);
    Ok(out)
}

/// Parses a suite name, reporting the known names on failure.
pub fn parse_suite(name: &str) -> Result<Suite> {
    name.parse().map_err(|_| Error::OutOfRange {
        what: "suite".into(),
        detail: format!("`{name}`; expected one of {}", Suite::ALL.map(Suite::name).join(", ")),
    })
}
