//! Shared term-list formatting for elements across the algebras. The output
//! re-parses under the CLI expression grammar.

use crate::coeff::Scalar;

/// Parenthesize printed scalars that contain top-level `+`/`-`.
pub(crate) fn wrap_sum(text: &str) -> String {
    if text.contains(" + ") || text.contains(" - ") {
        format!("({})", text)
    } else {
        text.to_string()
    }
}

/// Append one `coeff * mono` term to `out`, folding a leading minus sign of
/// the coefficient into the separator. An empty `mono` stands for the unit
/// monomial.
pub(crate) fn push_term(out: &mut String, first: bool, coeff: &Scalar, mono: &str) {
    let printed = coeff.to_string();
    // Fold the sign into the separator only when stripping it negates the
    // whole coefficient, i.e. for single-term coefficients.
    let (neg, body_coeff) = match printed.strip_prefix('-') {
        Some(rest) if !rest.contains(" + ") && !rest.contains(" - ") => {
            (true, rest.to_string())
        }
        _ => (false, printed),
    };
    if first {
        if neg {
            out.push('-');
        }
    } else if neg {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    if mono.is_empty() {
        out.push_str(&wrap_sum(&body_coeff));
        return;
    }
    if body_coeff != "1" {
        out.push_str(&wrap_sum(&body_coeff));
        out.push('*');
    }
    out.push_str(mono);
}
