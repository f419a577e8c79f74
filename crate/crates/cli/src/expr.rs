//! Custom phase formulas from configuration text.
//!
//! Expressions are evaluated over the variables `l`, `m`, `k1`, `k2` with
//! the constants `pi` and `tau` predefined. The full operator and function
//! set is evalexpr's (`+ - * / % ^`, `math::sqrt`, `math::sin`,
//! `math::cos`, ...). Example:
//!
//! ```text
//! custom_expr = "2*pi*((m+l)*k1 + l*k2)"
//! ```

use std::f64::consts::{PI, TAU};

use evalexpr::{ContextWithMutableVariables, HashMapContext, Node, Value};

use arraybeam::phases::PhaseFamily;

use crate::error::{CliError, Result};

fn eval_tree(tree: &Node, l: i64, m: i64, k1: f64, k2: f64) -> std::result::Result<f64, String> {
    let mut ctx = HashMapContext::new();
    for (name, value) in [
        ("pi", PI),
        ("tau", TAU),
        ("l", l as f64),
        ("m", m as f64),
        ("k1", k1),
        ("k2", k2),
    ] {
        ctx.set_value(name.into(), Value::Float(value)).map_err(|e| e.to_string())?;
    }
    match tree.eval_with_context(&ctx).map_err(|e| e.to_string())? {
        Value::Float(f) => Ok(f),
        Value::Int(i) => Ok(i as f64),
        other => Err(format!("expression evaluated to non-number {other:?}")),
    }
}

/// Compile a custom phase expression into a [`PhaseFamily`]. The expression
/// is probed at a few sample points so syntax and type errors surface at
/// configuration time; runtime evaluation failures map to NaN, which the
/// phase-assignment layer rejects as a validation error.
pub fn compile_custom_family(expr: &str) -> Result<PhaseFamily> {
    let tree = evalexpr::build_operator_tree(expr)
        .map_err(|e| CliError::Parse(format!("custom_expr: {e}")))?;
    for (l, m, k1, k2) in [(0, 0, 0.0, 0.0), (1, 2, 0.5, -1.5), (3, 1, -2.0, 2.0)] {
        let v = eval_tree(&tree, l, m, k1, k2)
            .map_err(|e| CliError::validation("custom_expr", e))?;
        if !v.is_finite() {
            return Err(CliError::validation(
                "custom_expr",
                format!("not finite at l={l}, m={m}, k1={k1}, k2={k2}"),
            ));
        }
    }
    Ok(PhaseFamily::custom(move |l, m, k1, k2| {
        eval_tree(&tree, l, m, k1, k2).unwrap_or(f64::NAN)
    }))
}
