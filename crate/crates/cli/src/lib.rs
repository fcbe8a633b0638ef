//! Batch front end: every library computation as a subcommand.
//!
//! [`run`] takes an argument vector and returns the exit code and the two
//! output streams, so the binary is a thin wrapper and tests can drive the
//! interface directly. Exit codes: 0 success, 1 domain error (including a
//! negative membership answer), 2 parse error.

mod output;

use std::str::FromStr;

use clap::{Parser as ClapParser, Subcommand, ValueEnum};
use gradweyl::cideal::{ideal_intersect, ideal_product, ideal_sum, GradedIdeal};
use gradweyl::cmod::{
    ext1_dim, generates, hom_dim, proj_canonical_chain, proj_iso, surjects_onto_twist, tensor,
    Module, ProjMod, SimpleMod,
};
use gradweyl::cring::{AlmostAut, CElement};
use gradweyl::k0::{class_of, k0_reduce, GroupRingExpr, K0Elem};
use gradweyl::pic::PicElem;
use gradweyl::text::parse_generators;
use gradweyl::weyl::{
    bridge_autoequiv, ext1_dim_a, iota_component, iota_ideal, match_simple_a_to_c,
    match_simple_c_to_a, ASimple, BElem, WeylElem,
};
use gradweyl::{Error, FinSet};

pub use output::Value;

#[derive(ClapParser, Debug)]
#[command(name = "gradweyl", version, about = "Exact computations in the graded ring C and the graded Weyl algebra")]
struct Cli {
    /// Emit `{"kind": ..., "value": ...}` instead of the text grammar.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum IdealOp {
    Sum,
    Product,
    Intersect,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Product in C.
    Cmul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Apply an almost-automorphism such as `tau`, `phi` or `tau^-2*phi`.
    Capply {
        aut: String,
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Normal form `(d)*x{J}` of the ideal generated by `f*x{I}; g*x{J}; ...`.
    IdealNormalize {
        #[arg(allow_hyphen_values = true)]
        generators: String,
    },
    /// Membership of an element in an ideal; exits 1 when it is not a member.
    IdealMember {
        #[arg(allow_hyphen_values = true)]
        element: String,
        ideal: String,
    },
    /// Sum, product or intersection of two ideals in normal form.
    IdealOp {
        op: IdealOp,
        a: String,
        b: String,
    },
    /// `dim hom(P, S)` for `P` given as `{I}` or a projective `C{I} + ...`.
    HomDim { source: String, simple: String },
    /// The twist `M(J)`.
    Twist { module: String, set: String },
    /// `M ⊗ N`, extended biadditively over direct sums.
    Tensor { a: String, b: String },
    /// Whether two projectives are isomorphic.
    ProjIso { a: String, b: String },
    /// Nested representative `C(I_1) + ... + C(I_r)` with `I_1 ⊇ I_2 ⊇ ...`.
    ProjCanon { module: String },
    /// Whether `C x_I + C x_J` surjects onto `C x_K` in degree zero.
    Surjects { i: String, j: String, k: String },
    /// Whether the twists `C(I)` of the family generate `C(K)`.
    Generates {
        target: String,
        #[arg(required = true)]
        family: Vec<String>,
    },
    /// Reduced form of a class in the group ring `ℤ[u_n]`.
    K0Reduce {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Product of two classes in K₀.
    K0Mul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Class of a module in K₀.
    K0Class { module: String },
    /// Rank of a class in K₀.
    K0Rank {
        #[arg(allow_hyphen_values = true)]
        class: String,
    },
    /// `F∘G` in canonical form `(J,h)`.
    PicCompose { f: String, g: String },
    /// Inverse of a Picard element.
    PicInvert { f: String },
    /// Action on a module, or on a class in K₀ with `--k0`.
    PicAct {
        f: String,
        #[arg(allow_hyphen_values = true)]
        target: String,
        #[arg(long)]
        k0: bool,
    },
    /// Product in the graded Weyl algebra.
    Wmul {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Monic generator of `(ι_J A)_m`.
    IotaComponent {
        set: String,
        #[arg(allow_hyphen_values = true)]
        degree: i64,
    },
    /// Homogeneous generators of the right ideal `ι_n A`.
    IotaIdeal {
        #[arg(allow_hyphen_values = true)]
        n: i64,
    },
    /// Product in B, written `f@J`.
    Bmul { a: String, b: String },
    /// The matched simple on the other side of the dictionary.
    BridgeSimple {
        simple: String,
        /// Read the input as a simple A-module.
        #[arg(long)]
        from_a: bool,
    },
    /// The permutation of A-side special simples induced by a Picard element.
    BridgeFunctor {
        f: String,
        #[arg(long, default_value_t = 16)]
        window: i64,
    },
    /// `dim Ext¹(S, T)` for distinct special simples.
    Ext1 {
        s: String,
        t: String,
        /// Read both simples as A-modules.
        #[arg(long)]
        a: bool,
    },
    /// ASCII picture of the line with doubled integer points.
    Picture {
        #[arg(long, default_value_t = 3)]
        window: i64,
    },
}

/// Exit code and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Parse { arg: &'static str, err: Error },
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Parse { arg: "input", err: e },
            e => Failure::Domain(e),
        }
    }
}

/// Parse errors keep their kind; other rejections of the input are domain errors.
fn parse<T: FromStr<Err = Error>>(arg: &'static str, s: &str) -> Result<T, Failure> {
    T::from_str(s).map_err(|err| match err {
        Error::Parse(_) => Failure::Parse { arg, err },
        e => Failure::Domain(e),
    })
}

const MAX_WINDOW: i64 = 1 << 12;

fn check_window(window: i64) -> Result<(), Failure> {
    if (0..=MAX_WINDOW).contains(&window) {
        Ok(())
    } else {
        Err(Failure::Domain(Error::InvalidArgument(format!(
            "window must lie in [0, {MAX_WINDOW}], got {window}"
        ))))
    }
}

fn hom_source(s: &str) -> Result<ProjMod, Failure> {
    if s.trim_start().starts_with('{') {
        Ok(ProjMod::twist_of_c(parse("source", s)?))
    } else {
        parse("source", s)
    }
}

fn execute(cmd: Command) -> Result<(Value, bool), Failure> {
    use Value as V;
    let value = match cmd {
        Command::Cmul { a, b } => {
            V::C(&parse::<CElement>("a", &a)? * &parse::<CElement>("b", &b)?)
        }
        Command::Capply { aut, element } => {
            let alpha: AlmostAut = parse("aut", &aut)?;
            V::C(alpha.apply(&parse("element", &element)?)?)
        }
        Command::IdealNormalize { generators } => {
            let gens = parse_generators(&generators).map_err(|err| match err {
                Error::Parse(_) => Failure::Parse { arg: "generators", err },
                e => Failure::Domain(e),
            })?;
            V::Ideal(gradweyl::cideal::ideal_normalize(&gens)?)
        }
        Command::IdealMember { element, ideal } => {
            let c: CElement = parse("element", &element)?;
            let a: GradedIdeal = parse("ideal", &ideal)?;
            let member = a.contains(&c);
            return Ok((V::Bool(member), member));
        }
        Command::IdealOp { op, a, b } => {
            let (a, b): (GradedIdeal, GradedIdeal) = (parse("a", &a)?, parse("b", &b)?);
            V::Ideal(match op {
                IdealOp::Sum => ideal_sum(&a, &b)?,
                IdealOp::Product => ideal_product(&a, &b),
                IdealOp::Intersect => ideal_intersect(&a, &b)?,
            })
        }
        Command::HomDim { source, simple } => {
            let s: SimpleMod = parse("simple", &simple)?;
            let p = hom_source(&source)?;
            V::Int(p.twists().iter().map(|i| hom_dim(i, &s)).sum())
        }
        Command::Twist { module, set } => {
            let m: Module = parse("module", &module)?;
            V::Module(m.twist(&parse("set", &set)?))
        }
        Command::Tensor { a, b } => {
            V::Module(tensor(&parse("a", &a)?, &parse("b", &b)?)?)
        }
        Command::ProjIso { a, b } => V::Bool(proj_iso(&parse("a", &a)?, &parse("b", &b)?)),
        Command::ProjCanon { module } => V::Proj(proj_canonical_chain(&parse("module", &module)?)),
        Command::Surjects { i, j, k } => {
            let (i, j, k): (FinSet, FinSet, FinSet) =
                (parse("i", &i)?, parse("j", &j)?, parse("k", &k)?);
            V::Bool(surjects_onto_twist(&i, &j, &k))
        }
        Command::Generates { target, family } => {
            let k: FinSet = parse("target", &target)?;
            let fam = family
                .iter()
                .map(|s| parse::<FinSet>("family", s))
                .collect::<Result<Vec<_>, _>>()?;
            V::Bool(generates(&fam, &k)?)
        }
        Command::K0Reduce { expr } => V::K0(k0_reduce(&parse::<GroupRingExpr>("expr", &expr)?)),
        Command::K0Mul { a, b } => {
            V::K0(&parse::<K0Elem>("a", &a)? * &parse::<K0Elem>("b", &b)?)
        }
        Command::K0Class { module } => V::K0(class_of(&parse("module", &module)?)),
        Command::K0Rank { class } => V::Integer(parse::<K0Elem>("class", &class)?.rank()),
        Command::PicCompose { f, g } => {
            let (f, g): (PicElem, PicElem) = (parse("f", &f)?, parse("g", &g)?);
            V::Pic(f.compose(&g)?)
        }
        Command::PicInvert { f } => V::Pic(parse::<PicElem>("f", &f)?.invert()?),
        Command::PicAct { f, target, k0 } => {
            let f: PicElem = parse("f", &f)?;
            if k0 {
                V::K0(f.act_k0(&parse("target", &target)?)?)
            } else {
                V::Module(f.act_module(&parse("target", &target)?)?)
            }
        }
        Command::Wmul { a, b } => {
            V::Weyl(&parse::<WeylElem>("a", &a)? * &parse::<WeylElem>("b", &b)?)
        }
        Command::IotaComponent { set, degree } => {
            V::Poly(iota_component(&parse("set", &set)?, degree))
        }
        Command::IotaIdeal { n } => V::WeylList(iota_ideal(n)),
        Command::Bmul { a, b } => {
            let (a, b): (BElem, BElem) = (parse("a", &a)?, parse("b", &b)?);
            V::B(a.mul(&b)?)
        }
        Command::BridgeSimple { simple, from_a } => {
            if from_a {
                V::Simple(match_simple_a_to_c(&parse("simple", &simple)?))
            } else {
                V::ASimple(match_simple_c_to_a(&parse("simple", &simple)?)?)
            }
        }
        Command::BridgeFunctor { f, window } => {
            check_window(window)?;
            V::Table(bridge_autoequiv(&parse("f", &f)?, window)?)
        }
        Command::Ext1 { s, t, a } => V::Int(if a {
            let (s, t): (ASimple, ASimple) = (parse("s", &s)?, parse("t", &t)?);
            ext1_dim_a(&s, &t)?
        } else {
            let (s, t): (SimpleMod, SimpleMod) = (parse("s", &s)?, parse("t", &t)?);
            ext1_dim(&s, &t)?
        }),
        Command::Picture { window } => {
            check_window(window)?;
            V::Picture(window)
        }
    };
    Ok((value, true))
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Outcome { code, stdout, stderr };
        }
    };
    let json = cli.json;
    match execute(cli.command) {
        Ok((value, success)) => Outcome {
            code: if success { 0 } else { 1 },
            stdout: format!("{}\n", if json { value.json().to_string() } else { value.text() }),
            stderr: String::new(),
        },
        Err(Failure::Parse { arg, err }) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: argument {arg}: {err}\n"),
        },
        Err(Failure::Domain(err)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        },
    }
}
