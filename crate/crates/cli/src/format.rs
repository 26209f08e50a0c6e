//! Text, LaTeX and JSON renderings of polynomials.
//!
//! JSON form: an array of `[e_a, e_q, e_t, "coeff"]` sorted by exponents,
//! coefficients as decimal strings.

use std::str::FromStr;

use clap::ValueEnum;
use num_bigint::BigInt;
use torus_spp::poly::{Style, TermOrder, AQT};
use torus_spp::{LaurentPoly3, Mono};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

pub type JsonTerm = (i32, i32, i32, String);

pub fn poly_to_json(p: &LaurentPoly3) -> Vec<JsonTerm> {
    let mut v: Vec<JsonTerm> = p.terms().map(|(m, c)| (m.a, m.q, m.t, c.to_string())).collect();
    v.sort_by_key(|x| (x.0, x.1, x.2));
    v
}

pub fn poly_from_json(terms: &[JsonTerm]) -> Result<LaurentPoly3, String> {
    let mut p = LaurentPoly3::zero();
    for (a, q, t, c) in terms {
        let c = BigInt::from_str(c).map_err(|e| format!("bad coefficient {c:?}: {e}"))?;
        if p.coeff(Mono::new(*a, *q, *t)) != BigInt::from(0) {
            return Err(format!("repeated monomial [{a}, {q}, {t}]"));
        }
        p.add_term(Mono::new(*a, *q, *t), c);
    }
    Ok(p)
}

pub fn render(p: &LaurentPoly3, format: Format, order: TermOrder) -> String {
    match format {
        Format::Text => p.render(&AQT, Style::Text, order),
        Format::Latex => p.render(&AQT, Style::Latex, order),
        Format::Json => serde_json::to_string(&poly_to_json(p)).expect("terms serialize"),
    }
}
