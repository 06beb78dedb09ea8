//! Machine-readable output: JSON mirrors of the element types.

use serde_json::{json, Value as Json};

use qgr_core::coeff::Scalar;
use qgr_core::dehom::DhomElem;
use qgr_core::grassmann::GrassElem;
use qgr_core::qmatrix::{MatAlgElem, PbwMonomial, TensorElem};

use crate::eval::Value;

/// `{"num": [[exp, "p/r"], ...], "den": [...]}`, exponents ascending.
pub fn scalar_json(s: &Scalar) -> Json {
    let side = |p: &qgr_core::coeff::LaurentPoly| -> Json {
        Json::Array(
            p.terms()
                .map(|(e, c)| json!([e, c.to_string()]))
                .collect(),
        )
    };
    json!({ "num": side(s.numerator()), "den": side(s.denominator()) })
}

fn mono_json(m: &PbwMonomial) -> Json {
    Json::Array(
        m.exponents()
            .map(|(g, e)| json!([g.row, g.col, e]))
            .collect(),
    )
}

pub fn mat_json(e: &MatAlgElem) -> Json {
    json!({
        "ambient": [e.ambient().rows, e.ambient().cols],
        "terms": e.terms().map(|(m, c)| json!({
            "mono": mono_json(m),
            "coeff": scalar_json(c),
        })).collect::<Vec<_>>(),
    })
}

pub fn grass_json(e: &GrassElem) -> Json {
    let mut out = json!({
        "ambient": [e.ambient().m, e.ambient().n],
        "terms": e.terms().map(|(t, c)| json!({
            "tableau": t.rows().iter().map(|r| r.cols().to_vec()).collect::<Vec<_>>(),
            "coeff": scalar_json(c),
        })).collect::<Vec<_>>(),
    });
    if e.ambient().q_inverted {
        out["q_inverted"] = json!(true);
    }
    out
}

pub fn dhom_json(e: &DhomElem) -> Json {
    json!({
        "powers": e.parts().map(|(c, g)| json!({
            "c": c,
            "numer": grass_json(g),
        })).collect::<Vec<_>>(),
    })
}

pub fn tensor_json(e: &TensorElem) -> Json {
    json!({
        "left_ambient": [e.left_ambient().rows, e.left_ambient().cols],
        "right_ambient": [e.right_ambient().rows, e.right_ambient().cols],
        "terms": e.terms().map(|((l, r), c)| json!({
            "left": mono_json(l),
            "right": mono_json(r),
            "coeff": scalar_json(c),
        })).collect::<Vec<_>>(),
    })
}

pub fn value_json(v: &Value) -> Json {
    match v {
        Value::Scalar(s) => scalar_json(s),
        Value::Mat(e) => mat_json(e),
        Value::Grass(e) => grass_json(e),
        Value::Dhom(e) => dhom_json(e),
    }
}
