use serde_json::{json, Value};

use quasishuffle::{NcPoly, Scalar, Tensor, Word};

fn letters(w: &Word) -> Value {
    Value::Array(
        w.letters()
            .iter()
            .map(|a| match a.color {
                None => json!([a.index]),
                Some(j) => json!([a.index, j]),
            })
            .collect(),
    )
}

/// Terms in printing order: longer words first.
fn ordered<R: Scalar>(x: &NcPoly<R>) -> Vec<(&Word, &R)> {
    let mut terms: Vec<_> = x.terms().collect();
    terms.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.0.cmp(b.0)));
    terms
}

pub fn poly_json<R: Scalar>(x: &NcPoly<R>) -> Value {
    let terms: Vec<Value> = ordered(x)
        .into_iter()
        .map(|(w, c)| json!({ "coeff": c.to_string(), "word": letters(w) }))
        .collect();
    json!({ "terms": terms })
}

pub fn tensor_json<R: Scalar>(x: &Tensor<R>) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .map(|((u, v), c)| json!({ "coeff": c.to_string(), "left": letters(u), "right": letters(v) }))
        .collect();
    json!({ "terms": terms })
}

pub fn render(v: &Value) -> String {
    serde_json::to_string(v).expect("values built here always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use quasishuffle::{Letter, Rational};

    #[test]
    fn schema() {
        let mut x: NcPoly<Rational> = NcPoly::word(Word::from_indices(&[3]));
        x.add_term(Word::new(vec![Letter { index: 2, color: Some(1) }, Letter::z(1)]), Rational::new(-1, 2).unwrap());
        let v = poly_json(&x);
        assert_eq!(v["terms"][0]["coeff"], "-1/2");
        assert_eq!(v["terms"][0]["word"], json!([[2, 1], [1]]));
        assert_eq!(v["terms"][1]["word"], json!([[3]]));
    }
}
