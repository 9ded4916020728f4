use super::{compositions, FormalSeries, NamedSeries};
use crate::error::{Error, Result};
use crate::scalars::Scalar;
use crate::word_algebra::{Alphabet, LinComb, NcPoly, Word};

fn check_order<R: Scalar>(f: &FormalSeries<R>, w: &Word) -> Result<()> {
    if w.len() > f.order() {
        return Err(Error::SeriesTooShort { order: f.order(), len: w.len() });
    }
    Ok(())
}

/// `Ψ_f` on one word by the head recursion
/// `Ψ(a_1..a_n) = sum_k c_k (a_1 ⋄ .. ⋄ a_k) Ψ(a_{k+1}..a_n)`.
pub fn psi_word<R: Scalar>(alphabet: &Alphabet<R>, f: &FormalSeries<R>, w: &Word) -> Result<NcPoly<R>> {
    check_order(f, w)?;
    let a = w.letters();
    let n = a.len();
    // tail[s] = Ψ(a_{s+1} .. a_n)
    let mut tail: Vec<NcPoly<R>> = vec![NcPoly::zero(); n + 1];
    tail[n] = NcPoly::one();
    for s in (0..n).rev() {
        let mut acc = NcPoly::zero();
        let mut run = LinComb::letter(a[s]);
        for k in 1..=n - s {
            if k > 1 {
                run = alphabet.diamond(&run, &LinComb::letter(a[s + k - 1]));
            }
            let c = f.coeff(k);
            if !c.is_zero() && !run.is_zero() {
                acc += tail[s + k].left_mul(&run.scale(&c));
            }
        }
        tail[s] = acc;
    }
    Ok(tail.swap_remove(0))
}

/// `Ψ_f(x)`; the truncation order of `f` must cover every word in `x`.
pub fn psi<R: Scalar>(alphabet: &Alphabet<R>, f: &FormalSeries<R>, x: &NcPoly<R>) -> Result<NcPoly<R>> {
    x.try_map_linear(|w| psi_word(alphabet, f, w))
}

/// `Ψ_f(x)` by summing `c_{i_1} ... c_{i_m} I[w]` over all compositions.
pub fn psi_oracle<R: Scalar>(
    alphabet: &Alphabet<R>,
    f: &FormalSeries<R>,
    x: &NcPoly<R>,
) -> Result<NcPoly<R>> {
    x.try_map_linear(|w| {
        check_order(f, w)?;
        if w.is_empty() {
            return Ok(NcPoly::one());
        }
        let mut out = NcPoly::zero();
        for comp in compositions(w.len())? {
            let weight = comp
                .parts()
                .iter()
                .fold(R::one(), |acc, &i| acc * f.coeff(i as usize));
            if !weight.is_zero() {
                out += comp.bracket_action(alphabet, w)?.scale(&weight);
            }
        }
        Ok(out)
    })
}

/// `Σ^ρ(x) = Ψ_{t/(1-ρt)}(x)`.
pub fn sigma_power<R: Scalar>(alphabet: &Alphabet<R>, rho: &R, x: &NcPoly<R>) -> NcPoly<R> {
    let f = NamedSeries::SigmaPower(rho.clone())
        .series(x.max_len().max(1))
        .expect("order is positive");
    psi(alphabet, &f, x).expect("series covers every word")
}
