use crate::error::{Error, Result};
use crate::scalars::Scalar;
use crate::series_maps::Composition;
use crate::word_algebra::{NcPoly, Word};

/// Compositions of `n` into exactly `k` parts, lexicographic.
fn compositions_with_parts(n: u32, k: u32) -> Vec<Vec<u32>> {
    if k == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 1..=n.saturating_sub(k - 1) {
        for mut rest in compositions_with_parts(n - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `S(k,l)`: every word `z_{i_1} ... z_{i_l}` of weight `k` with `i_1 >= 2`.
pub fn sum_words<R: Scalar>(k: u32, l: u32) -> Result<NcPoly<R>> {
    if l == 0 || l >= k {
        return Err(Error::OutOfRange { what: "l".into(), detail: format!("need 1 <= l <= k - 1, got k = {k}, l = {l}") });
    }
    Ok(compositions_with_parts(k, l)
        .into_iter()
        .filter(|c| c[0] >= 2)
        .map(|c| (Word::from_indices(&c), R::one()))
        .collect())
}

/// `e(2n,k)`: `z_{2i_1} ... z_{2i_k}` summed over compositions of `n` with
/// `k` parts.
pub fn even_comp_sum<R: Scalar>(n: u32, k: u32) -> Result<NcPoly<R>> {
    if k == 0 || k > n {
        return Err(Error::OutOfRange { what: "k".into(), detail: format!("need 1 <= k <= n, got n = {n}, k = {k}") });
    }
    let mut out = NcPoly::zero();
    for parts in compositions_with_parts(n, k) {
        let c = Composition::new(parts)?;
        let doubled: Vec<u32> = c.parts().iter().map(|i| 2 * i).collect();
        out.add_term(Word::from_indices(&doubled), R::one());
    }
    Ok(out)
}
