//! Printed values: the text grammar of the owning module, or a JSON object
//! `{"kind": <type>, "value": <payload>}`.
//!
//! Payloads: rationals and big integers are decimal strings (`"-3/2"`),
//! finite sets are integer arrays, polynomials are coefficient arrays from
//! the constant term upwards.

use gradweyl::cideal::GradedIdeal;
use gradweyl::cmod::{Module, ProjMod, SimpleMod};
use gradweyl::cring::CElement;
use gradweyl::k0::K0Elem;
use gradweyl::pic::PicElem;
use gradweyl::weyl::{ASimple, ActionTable, BElem, WeylElem};
use gradweyl::{FinSet, Poly};
use num_bigint::BigInt;
use serde_json::{json, Value as Json};

pub enum Value {
    Bool(bool),
    Int(usize),
    Integer(BigInt),
    Poly(Poly),
    C(CElement),
    Weyl(WeylElem),
    WeylList(Vec<WeylElem>),
    Ideal(GradedIdeal),
    Simple(SimpleMod),
    ASimple(ASimple),
    Module(Module),
    Proj(ProjMod),
    K0(K0Elem),
    Pic(PicElem),
    B(BElem),
    Table(ActionTable),
    Picture(i64),
}

fn finset(j: &FinSet) -> Json {
    json!(j.elements())
}

fn poly(p: &Poly) -> Json {
    Json::Array(p.coeffs().iter().map(|c| json!(c.to_string())).collect())
}

fn c_element(c: &CElement) -> Json {
    Json::Array(
        c.terms()
            .map(|(d, f)| json!({"degree": finset(d), "coeff": poly(f)}))
            .collect(),
    )
}

fn weyl(a: &WeylElem) -> Json {
    Json::Array(
        a.terms()
            .map(|(n, f)| json!({"degree": n, "coeff": poly(f)}))
            .collect(),
    )
}

fn simple(s: &SimpleMod) -> Json {
    match s {
        SimpleMod::X(n) => json!({"type": "X", "index": n}),
        SimpleMod::Y(n) => json!({"type": "Y", "index": n}),
        SimpleMod::O(l) => json!({"type": "O", "lambda": l.value().to_string()}),
    }
}

fn a_simple(s: &ASimple) -> Json {
    match s {
        ASimple::X(n) => json!({"type": "X", "index": n}),
        ASimple::Y(n) => json!({"type": "Y", "index": n}),
    }
}

fn proj(p: &ProjMod) -> Json {
    Json::Array(p.twists().iter().map(finset).collect())
}

fn k0(a: &K0Elem) -> Json {
    let points: serde_json::Map<String, Json> = a
        .point_coeffs()
        .map(|(m, c)| (m.to_string(), json!(c.to_string())))
        .collect();
    json!({"unit": a.unit_coeff().to_string(), "points": points})
}

const LINE_GAP: usize = 2;

/// Three label rows around the line: `X(n)` above its point, `Y(n)` below,
/// and the index underneath; every integer point is doubled.
fn picture(window: i64) -> String {
    let points: Vec<i64> = (-window..=window).collect();
    let width = points
        .iter()
        .map(|n| format!("Y({n})").len())
        .max()
        .unwrap_or(4)
        + LINE_GAP;
    let row = |cell: &dyn Fn(i64) -> String, fill: char| -> String {
        let mut s: String = std::iter::repeat_n(fill, LINE_GAP).collect();
        for &n in &points {
            let c = cell(n);
            let left = (width - c.chars().count()) / 2;
            let right = width - c.chars().count() - left;
            s.extend(std::iter::repeat_n(fill, left));
            s.push_str(&c);
            s.extend(std::iter::repeat_n(fill, right));
        }
        s.extend(std::iter::repeat_n(fill, LINE_GAP));
        s.trim_end().to_string()
    };
    [
        row(&|n| format!("X({n})"), ' '),
        row(&|_| "o".into(), ' '),
        row(&|_| "+".into(), '-'),
        row(&|_| "o".into(), ' '),
        row(&|n| format!("Y({n})"), ' '),
        row(&|n| n.to_string(), ' '),
    ]
    .join("\n")
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Bool(_) => "bool",
            Value::Int(_) | Value::Integer(_) => "integer",
            Value::Poly(_) => "polynomial",
            Value::C(_) => "c_element",
            Value::Weyl(_) => "weyl_element",
            Value::WeylList(_) => "weyl_elements",
            Value::Ideal(_) => "ideal",
            Value::Simple(_) => "simple",
            Value::ASimple(_) => "a_simple",
            Value::Module(_) => "module",
            Value::Proj(_) => "projective",
            Value::K0(_) => "k0",
            Value::Pic(_) => "pic",
            Value::B(_) => "b_element",
            Value::Table(_) => "action_table",
            Value::Picture(_) => "picture",
        }
    }

    pub fn text(&self) -> String {
        match self {
            Value::Bool(b) => b.to_string(),
            Value::Int(n) => n.to_string(),
            Value::Integer(n) => n.to_string(),
            Value::Poly(p) => p.to_string(),
            Value::C(c) => c.to_string(),
            Value::Weyl(a) => a.to_string(),
            Value::WeylList(gs) => gs.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "),
            Value::Ideal(a) => a.to_string(),
            Value::Simple(s) => s.to_string(),
            Value::ASimple(s) => s.to_string(),
            Value::Module(m) => m.to_string(),
            Value::Proj(p) => p.to_string(),
            Value::K0(a) => a.to_string(),
            Value::Pic(f) => f.to_string(),
            Value::B(b) => b.to_string(),
            Value::Table(t) => t
                .iter()
                .map(|(s, t)| format!("{s} -> {t}"))
                .collect::<Vec<_>>()
                .join("\n"),
            Value::Picture(w) => picture(*w),
        }
    }

    fn payload(&self) -> Json {
        match self {
            Value::Bool(b) => json!(b),
            Value::Int(n) => json!(n),
            Value::Integer(n) => json!(n.to_string()),
            Value::Poly(p) => poly(p),
            Value::C(c) => c_element(c),
            Value::Weyl(a) => weyl(a),
            Value::WeylList(gs) => Json::Array(gs.iter().map(weyl).collect()),
            Value::Ideal(GradedIdeal::Zero) => Json::Null,
            Value::Ideal(GradedIdeal::Principal { d, j }) => json!({"d": poly(d), "j": finset(j)}),
            Value::Simple(s) => simple(s),
            Value::ASimple(s) => a_simple(s),
            Value::Module(m) => json!({
                "projective": proj(m.projective()),
                "simples": m.simples().iter().map(simple).collect::<Vec<_>>(),
            }),
            Value::Proj(p) => proj(p),
            Value::K0(a) => k0(a),
            Value::Pic(f) => json!({
                "twist": finset(f.twist()),
                "epsilon": f.action().epsilon(),
                "shift": f.action().shift(),
            }),
            Value::B(b) => json!({"degree": finset(b.degree()), "poly": poly(b.poly())}),
            Value::Table(t) => Json::Array(
                t.iter()
                    .map(|(s, t)| json!({"from": a_simple(s), "to": a_simple(t)}))
                    .collect(),
            ),
            Value::Picture(w) => json!({
                "window": w,
                "points": (-w..=*w)
                    .map(|n| json!({"n": n, "upper": format!("X({n})"), "lower": format!("Y({n})")}))
                    .collect::<Vec<_>>(),
                "text": picture(*w),
            }),
        }
    }

    pub fn json(&self) -> Json {
        json!({"kind": self.kind(), "value": self.payload()})
    }
}
