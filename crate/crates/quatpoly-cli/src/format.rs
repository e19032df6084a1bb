//! JSON and text forms for rationals, quaternions, polynomials, and
//! problem files.
//!
//! One canonical shape each: a rational is a JSON integer or a `"p/q"`
//! string, a quaternion is a 4-array `[w, x, y, z]`, a polynomial is a
//! coefficient list in ascending degree, and a problem file is
//! `{"left": [{node, value}, ..], "right": [..]}`.  Printing and parsing
//! are mutually inverse on canonical files, and every parse error names
//! the field it rejects.
//!
//! Command-line arguments use a text form instead: the display syntax of
//! a quaternion (`1/2-k`, `i+j`), parsed back by [`quat_from_text`].

use std::str::FromStr;

use num_bigint::BigInt;
use quatpoly::{QPoly, Quat, Rat, RawProblem, SolutionSet};
use serde_json::{json, Value};

// ---- Rationals ----

/// Parses `p` or `p/q` into an exact rational.
pub fn rat_from_text(s: &str) -> Result<Rat, String> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let n = BigInt::from_str(num.trim()).map_err(|_| format!("malformed rational '{}'", s))?;
    let d = match den {
        Some(d) => {
            BigInt::from_str(d.trim()).map_err(|_| format!("malformed rational '{}'", s))?
        }
        None => BigInt::from(1),
    };
    if d == BigInt::from(0) {
        return Err(format!("malformed rational '{}': denominator is zero", s));
    }
    Ok(Rat::new(n, d))
}

/// Canonical JSON form: an integer when it fits, a string otherwise.
pub fn rat_json(r: &Rat) -> Value {
    if *r.denom() == BigInt::from(1) {
        if let Ok(n) = i64::try_from(r.numer()) {
            return json!(n);
        }
        return Value::String(r.numer().to_string());
    }
    Value::String(format!("{}/{}", r.numer(), r.denom()))
}

/// Reads a rational from a JSON integer or `"p/q"` string; `path` names
/// the field in error messages.
pub fn rat_from_json(v: &Value, path: &str) -> Result<Rat, String> {
    match v {
        Value::Number(n) => match n.as_i64() {
            Some(k) => Ok(Rat::from_integer(BigInt::from(k))),
            None => Err(format!(
                "{}: expected an integer or \"p/q\" string, got {}",
                path, v
            )),
        },
        Value::String(s) => rat_from_text(s).map_err(|e| format!("{}: {}", path, e)),
        other => Err(format!(
            "{}: expected an integer or \"p/q\" string, got {}",
            path, other
        )),
    }
}

// ---- Quaternions ----

/// Canonical JSON form `[w, x, y, z]`.
pub fn quat_json(q: &Quat) -> Value {
    Value::Array(vec![
        rat_json(&q.w),
        rat_json(&q.x),
        rat_json(&q.y),
        rat_json(&q.z),
    ])
}

/// Reads a quaternion literal, a 4-array of rationals.
pub fn quat_from_json(v: &Value, path: &str) -> Result<Quat, String> {
    let arr = v
        .as_array()
        .ok_or_else(|| format!("{}: expected a quaternion as a 4-array [w, x, y, z]", path))?;
    if arr.len() != 4 {
        return Err(format!("{}: expected 4 components, got {}", path, arr.len()));
    }
    let mut comps = Vec::with_capacity(4);
    for (k, comp) in arr.iter().enumerate() {
        comps.push(rat_from_json(comp, &format!("{}[{}]", path, k))?);
    }
    let mut it = comps.into_iter();
    Ok(Quat::new(
        it.next().unwrap(),
        it.next().unwrap(),
        it.next().unwrap(),
        it.next().unwrap(),
    ))
}

/// Parses the display form of a quaternion: a signed sum of terms, each a
/// rational, a unit `i`/`j`/`k`, or a rational times a unit (`2k`,
/// `1/2i`).  Whitespace is ignored.
pub fn quat_from_text(s: &str) -> Result<Quat, String> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(format!("malformed quaternion '{}': empty", s));
    }
    let mut comps = [
        Rat::from_integer(BigInt::from(0)),
        Rat::from_integer(BigInt::from(0)),
        Rat::from_integer(BigInt::from(0)),
        Rat::from_integer(BigInt::from(0)),
    ];
    let bytes = compact.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let negative = match bytes[pos] {
            b'+' => {
                pos += 1;
                false
            }
            b'-' => {
                pos += 1;
                true
            }
            _ => false,
        };
        let start = pos;
        while pos < bytes.len() && bytes[pos] != b'+' && bytes[pos] != b'-' {
            pos += 1;
        }
        let term = &compact[start..pos];
        let (coeff, unit) = match term.chars().last() {
            Some('i') => (&term[..term.len() - 1], 1),
            Some('j') => (&term[..term.len() - 1], 2),
            Some('k') => (&term[..term.len() - 1], 3),
            _ => (term, 0),
        };
        let mut mag = if coeff.is_empty() {
            if unit == 0 {
                return Err(format!("malformed quaternion '{}': empty term", s));
            }
            Rat::from_integer(BigInt::from(1))
        } else {
            rat_from_text(coeff).map_err(|e| format!("malformed quaternion '{}': {}", s, e))?
        };
        if negative {
            mag = -mag;
        }
        comps[unit] = comps[unit].clone() + mag;
    }
    let mut it = comps.into_iter();
    Ok(Quat::new(
        it.next().unwrap(),
        it.next().unwrap(),
        it.next().unwrap(),
        it.next().unwrap(),
    ))
}

// ---- Polynomials ----

/// Canonical JSON form: the coefficient list in ascending degree.
pub fn poly_json(p: &QPoly) -> Value {
    Value::Array(p.coeffs().iter().map(quat_json).collect())
}

/// Reads a polynomial, a list of quaternion literals in ascending degree.
pub fn poly_from_json(v: &Value, path: &str) -> Result<QPoly, String> {
    let arr = v.as_array().ok_or_else(|| {
        format!(
            "{}: expected a list of quaternion coefficients in ascending degree",
            path
        )
    })?;
    let mut coeffs = Vec::with_capacity(arr.len());
    for (k, c) in arr.iter().enumerate() {
        coeffs.push(quat_from_json(c, &format!("{}[{}]", path, k))?);
    }
    Ok(QPoly::from_coeffs(coeffs))
}

/// Parses a whole polynomial file.
pub fn poly_file(text: &str) -> Result<QPoly, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| format!("invalid JSON: {}", e))?;
    poly_from_json(&v, "polynomial")
}

// ---- Problem files ----

/// Parses a problem file `{"left": [{node, value}, ..], "right": [..]}`.
/// Either side may be absent.  Duplicate nodes within a side are rejected
/// here, so the returned problem is always valid.
pub fn problem_from_json(text: &str) -> Result<RawProblem, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| format!("invalid JSON: {}", e))?;
    let obj = v
        .as_object()
        .ok_or("expected a top-level object with \"left\" and \"right\" lists")?;
    for key in obj.keys() {
        if key != "left" && key != "right" {
            return Err(format!(
                "unknown field '{}' (expected \"left\" or \"right\")",
                key
            ));
        }
    }
    let left = side_conditions(obj.get("left"), "left")?;
    let right = side_conditions(obj.get("right"), "right")?;
    Ok(RawProblem::new(left, right).expect("duplicates are rejected per side above"))
}

fn side_conditions(v: Option<&Value>, side: &str) -> Result<Vec<(Quat, Quat)>, String> {
    let Some(v) = v else {
        return Ok(Vec::new());
    };
    let arr = v
        .as_array()
        .ok_or_else(|| format!("{}: expected a list of {{node, value}} entries", side))?;
    let mut out: Vec<(Quat, Quat)> = Vec::with_capacity(arr.len());
    for (s, entry) in arr.iter().enumerate() {
        let path = format!("{}[{}]", side, s);
        let obj = entry
            .as_object()
            .ok_or_else(|| format!("{}: expected an object with \"node\" and \"value\"", path))?;
        for key in obj.keys() {
            if key != "node" && key != "value" {
                return Err(format!("{}: unknown field '{}'", path, key));
            }
        }
        let node_v = obj
            .get("node")
            .ok_or_else(|| format!("{}: missing \"node\"", path))?;
        let value_v = obj
            .get("value")
            .ok_or_else(|| format!("{}: missing \"value\"", path))?;
        let node = quat_from_json(node_v, &format!("{}.node", path))?;
        let value = quat_from_json(value_v, &format!("{}.value", path))?;
        if let Some(prev) = out.iter().position(|(n, _)| *n == node) {
            return Err(format!(
                "{}.node: duplicates {}[{}].node",
                path, side, prev
            ));
        }
        out.push((node, value));
    }
    Ok(out)
}

/// Canonical JSON form of a problem, the inverse of [`problem_from_json`].
pub fn problem_json(p: &RawProblem) -> Value {
    let side = |conds: &[(Quat, Quat)]| {
        Value::Array(
            conds
                .iter()
                .map(|(node, value)| json!({"node": quat_json(node), "value": quat_json(value)}))
                .collect(),
        )
    };
    json!({"left": side(p.left()), "right": side(p.right())})
}

// ---- Solutions ----

/// Serializes a solution family: the particular solution, one plane entry
/// per paired condition, and the two-sided ideal generators.
pub fn solution_json(sol: &SolutionSet) -> Value {
    let planes: Vec<Value> = sol
        .paired_terms
        .iter()
        .map(|t| {
            let (b1, b2) = t.plane.basis();
            json!({
                "basis": [quat_json(b1), quat_json(b2)],
                "left_factor": poly_json(&t.left_factor),
                "right_factor": poly_json(&t.right_factor),
            })
        })
        .collect();
    json!({
        "particular": poly_json(&sol.particular),
        "planes": planes,
        "ideal_left": poly_json(&sol.ideal_left),
        "ideal_right": poly_json(&sol.ideal_right),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(w: i64, x: i64, y: i64, z: i64) -> Quat {
        Quat::new(
            Rat::from_integer(BigInt::from(w)),
            Rat::from_integer(BigInt::from(x)),
            Rat::from_integer(BigInt::from(y)),
            Rat::from_integer(BigInt::from(z)),
        )
    }

    #[test]
    fn rational_forms_round_trip() {
        // 3 stays an integer, -7/2 becomes a string, both parse back.
        let three = Rat::from_integer(BigInt::from(3));
        assert_eq!(rat_json(&three), json!(3));
        assert_eq!(rat_from_json(&json!(3), "x").unwrap(), three);

        let frac = Rat::new(BigInt::from(-7), BigInt::from(2));
        assert_eq!(rat_json(&frac), json!("-7/2"));
        assert_eq!(rat_from_json(&json!("-7/2"), "x").unwrap(), frac);

        // A numerator beyond i64 falls back to the string form.
        let big = Rat::from_integer(BigInt::from(i64::MAX) * 4);
        let v = rat_json(&big);
        assert_eq!(v, json!("36893488147419103228"));
        assert_eq!(rat_from_json(&v, "x").unwrap(), big);

        // Parsing canonicalizes: 2/4 is 1/2, 1/-2 is -1/2.
        assert_eq!(
            rat_from_text("2/4").unwrap(),
            Rat::new(BigInt::from(1), BigInt::from(2))
        );
        assert_eq!(
            rat_from_text("1/-2").unwrap(),
            Rat::new(BigInt::from(-1), BigInt::from(2))
        );
    }

    #[test]
    fn rational_errors_name_the_field() {
        let err = rat_from_json(&json!("1/0"), "left[0].value[2]").unwrap_err();
        assert!(err.contains("left[0].value[2]"), "got: {}", err);
        assert!(err.contains("denominator is zero"), "got: {}", err);

        // Floats are not exact; they are rejected rather than rounded.
        let err = rat_from_json(&json!(0.5), "x").unwrap_err();
        assert!(err.contains("expected an integer"), "got: {}", err);

        assert!(rat_from_text("").is_err());
        assert!(rat_from_text("a/b").is_err());
        assert!(rat_from_text("1/").is_err());
    }

    #[test]
    fn quaternion_json_round_trips() {
        let a = Quat::new(
            Rat::new(BigInt::from(1), BigInt::from(2)),
            Rat::from_integer(BigInt::from(0)),
            Rat::from_integer(BigInt::from(-3)),
            Rat::new(BigInt::from(2), BigInt::from(3)),
        );
        let v = quat_json(&a);
        assert_eq!(v, json!(["1/2", 0, -3, "2/3"]));
        assert_eq!(quat_from_json(&v, "q").unwrap(), a);

        let err = quat_from_json(&json!([1, 2, 3]), "q").unwrap_err();
        assert!(err.contains("expected 4 components"), "got: {}", err);
    }

    #[test]
    fn quaternion_text_inverts_display() {
        // Display forms of assorted quaternions parse back exactly.
        let samples = [
            q(0, 0, 0, 0),
            q(1, 0, 0, 0),
            q(-1, 0, 0, 0),
            q(0, 1, 0, 0),
            q(0, -1, 0, 0),
            q(0, 2, 0, -3),
            q(1, 1, 1, 1),
            q(-4, 0, 7, 0),
            Quat::new(
                Rat::new(BigInt::from(1), BigInt::from(2)),
                Rat::new(BigInt::from(-2), BigInt::from(3)),
                Rat::from_integer(BigInt::from(0)),
                Rat::new(BigInt::from(5), BigInt::from(7)),
            ),
        ];
        for a in &samples {
            let text = a.to_string();
            assert_eq!(quat_from_text(&text).unwrap(), *a, "display was: {}", text);
        }

        // Hand-written variants with spacing and repeated units.
        assert_eq!(quat_from_text(" 1 - k ").unwrap(), q(1, 0, 0, -1));
        assert_eq!(quat_from_text("i+j").unwrap(), q(0, 1, 1, 0));
        assert_eq!(quat_from_text("2i").unwrap(), q(0, 2, 0, 0));
        assert_eq!(
            quat_from_text("1/2i").unwrap(),
            Quat::new(
                Rat::from_integer(BigInt::from(0)),
                Rat::new(BigInt::from(1), BigInt::from(2)),
                Rat::from_integer(BigInt::from(0)),
                Rat::from_integer(BigInt::from(0)),
            )
        );
        assert_eq!(quat_from_text("i+i").unwrap(), q(0, 2, 0, 0));

        assert!(quat_from_text("").is_err());
        assert!(quat_from_text("+").is_err());
        assert!(quat_from_text("2x").is_err());
        assert!(quat_from_text("1//2").is_err());
    }

    #[test]
    fn polynomial_json_round_trips() {
        // (1-k) + (i+j)z as a coefficient list.
        let p = QPoly::from_coeffs(vec![q(1, 0, 0, -1), q(0, 1, 1, 0)]);
        let v = poly_json(&p);
        assert_eq!(v, json!([[1, 0, 0, -1], [0, 1, 1, 0]]));
        assert_eq!(poly_from_json(&v, "f").unwrap(), p);

        // Trailing zero coefficients normalize away on parse.
        let padded = json!([[1, 0, 0, -1], [0, 1, 1, 0], [0, 0, 0, 0]]);
        assert_eq!(poly_from_json(&padded, "f").unwrap(), p);

        // The zero polynomial is the empty list.
        assert_eq!(poly_json(&QPoly::zero()), json!([]));
        assert!(poly_from_json(&json!([]), "f").unwrap().is_zero());
    }

    #[test]
    fn problem_files_round_trip() {
        let text = r#"{
            "left": [
                {"node": [0, 1, 0, 0], "value": [1, 0, 0, 1]},
                {"node": [0, 0, 2, 0], "value": ["1/2", 0, 0, 0]}
            ],
            "right": [
                {"node": [0, 0, 1, 0], "value": [0, 0, 0, 0]}
            ]
        }"#;
        let parsed = problem_from_json(text).unwrap();
        assert_eq!(parsed.left().len(), 2);
        assert_eq!(parsed.right().len(), 1);

        // Print then parse is the identity, and printing the reparse
        // reproduces the bytes: the canonical form is a fixed point.
        let printed = serde_json::to_string_pretty(&problem_json(&parsed)).unwrap();
        let reparsed = problem_from_json(&printed).unwrap();
        assert_eq!(reparsed, parsed);
        assert_eq!(
            serde_json::to_string_pretty(&problem_json(&reparsed)).unwrap(),
            printed
        );
    }

    #[test]
    fn problem_errors_name_offending_fields() {
        let dup = r#"{"left": [
            {"node": [0, 1, 0, 0], "value": [0, 0, 0, 0]},
            {"node": [0, 1, 0, 0], "value": [1, 0, 0, 0]}
        ]}"#;
        let err = problem_from_json(dup).unwrap_err();
        assert!(err.contains("left[1].node"), "got: {}", err);
        assert!(err.contains("duplicates left[0].node"), "got: {}", err);

        let bad = r#"{"right": [{"node": [0, 1, 0, 0], "value": ["1/0", 0, 0, 0]}]}"#;
        let err = problem_from_json(bad).unwrap_err();
        assert!(err.contains("right[0].value[0]"), "got: {}", err);
        assert!(err.contains("denominator is zero"), "got: {}", err);

        let unknown = r#"{"middle": []}"#;
        let err = problem_from_json(unknown).unwrap_err();
        assert!(err.contains("unknown field 'middle'"), "got: {}", err);

        let missing = r#"{"left": [{"node": [0, 1, 0, 0]}]}"#;
        let err = problem_from_json(missing).unwrap_err();
        assert!(err.contains("left[0]: missing \"value\""), "got: {}", err);
    }
}
