use clap::{ArgGroup, Args, ValueEnum};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde_json::json;

use stanley_core::stanley::{double, type_a, type_c, DEFAULT_LENGTH_CAP};
use stanley_core::symfunc::{expand_in_schur, expand_in_schur_p, expand_in_schur_x, SchurTerm};
use stanley_core::{MultiPoly, Partition, SignedPermutation, Word};

use crate::config::Config;
use crate::{Failure, Output};

#[derive(Args)]
#[command(group(ArgGroup::new("element").required(true).args(["word", "window"])))]
pub struct ComputeArgs {
    /// Generating-function family: increasing (a), unimodal (c), doubled (d).
    #[arg(long = "type", value_enum)]
    family: Family,

    /// Word in the generators, comma separated; "" is the identity.
    #[arg(long, value_name = "LETTERS")]
    word: Option<String>,

    /// Window notation, e.g. "[-2,-1,4,3]".
    #[arg(long, value_name = "WINDOW")]
    window: Option<String>,

    /// Number of blocks, i.e. variables per alphabet.
    #[arg(long)]
    k: Option<usize>,

    #[arg(long, value_enum, default_value_t = Format::Monomial)]
    format: Format,

    #[arg(long, value_enum, default_value_t = Specialize::None)]
    specialize: Specialize,

    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    A,
    C,
    D,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::A => "a",
            Family::C => "c",
            Family::D => "d",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Monomial,
    Schur,
    SchurP,
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Monomial => "monomial",
            Format::Schur => "schur",
            Format::SchurP => "schur-p",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Specialize {
    None,
    #[value(name = "y=0")]
    YZero,
    #[value(name = "x=0")]
    XZero,
    #[value(name = "y=x")]
    YToX,
    #[value(name = "y=-x")]
    YToNegX,
    #[value(name = "y=tx")]
    YToTx,
}

impl Specialize {
    fn name(self) -> &'static str {
        match self {
            Specialize::None => "none",
            Specialize::YZero => "y=0",
            Specialize::XZero => "x=0",
            Specialize::YToX => "y=x",
            Specialize::YToNegX => "y=-x",
            Specialize::YToTx => "y=tx",
        }
    }

    fn apply(self, poly: &MultiPoly) -> MultiPoly {
        match self {
            Specialize::None => poly.clone(),
            Specialize::YZero => poly.specialize_y_zero(),
            Specialize::XZero => poly.specialize_x_zero(),
            Specialize::YToX => poly.specialize_y_to_x(),
            Specialize::YToNegX => poly.specialize_y_to_neg_x(),
            Specialize::YToTx => poly.specialize_y_to_tx(),
        }
    }
}

/// Either flag identifies the element: a word is evaluated in the
/// smallest window that carries all its letters.
pub fn parse_element(
    word: &Option<String>,
    window: &Option<String>,
) -> Result<SignedPermutation, Failure> {
    if let Some(text) = word {
        let letters = parse_word(text)?;
        let n = letters.iter().copied().max().map_or(1, |m| m as usize + 1);
        Ok(SignedPermutation::evaluate(&Word(letters), n)?)
    } else {
        let text = window.as_ref().expect("one of word/window is present");
        Ok(text.parse::<SignedPermutation>()?)
    }
}

fn parse_word(text: &str) -> Result<Vec<u8>, Failure> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|p| {
            p.trim()
                .parse::<u8>()
                .map_err(|_| Failure::Parse(format!("bad word letter {:?}", p.trim())))
        })
        .collect()
}

enum Rendered {
    Poly(MultiPoly),
    Double(Vec<SchurTerm>),
    Single(&'static str, Vec<(Partition, BigInt)>),
    Graded(Vec<(u16, Vec<(Partition, BigInt)>)>),
}

pub fn run(args: ComputeArgs, cfg: &Config) -> Result<(), Failure> {
    let cap = cfg.cap.unwrap_or(DEFAULT_LENGTH_CAP);
    let k = args.k.or(cfg.k).unwrap_or(3);
    let w = parse_element(&args.word, &args.window)?;
    let poly = match args.family {
        Family::A => type_a(&w, k, cap)?,
        Family::C => type_c(&w, k, cap)?,
        Family::D => double(&w, k, cap)?,
    };
    let symmetric = poly.symmetry_failure().is_none();
    let poly = args.specialize.apply(&poly);

    let rendered = match args.format {
        Format::Monomial => Rendered::Poly(poly),
        Format::Schur => {
            if poly.uses_t() {
                let mut graded = Vec::new();
                for (power, slice) in poly.split_by_t() {
                    graded.push((power, expand_in_schur_x(&slice)?));
                }
                Rendered::Graded(graded)
            } else if poly.uses_y() {
                Rendered::Double(expand_in_schur(&poly)?)
            } else {
                Rendered::Single("s", expand_in_schur_x(&poly)?)
            }
        }
        Format::SchurP => Rendered::Single("P", expand_in_schur_p(&poly)?),
    };

    match args.output {
        Output::Text => {
            if args.family == Family::D && !symmetric {
                println!("# not symmetric; Schur expansion is not defined for this element");
            }
            println!("{}", render_text(&rendered));
        }
        Output::Json => {
            let mut envelope = json!({
                "command": "compute",
                "type": args.family.name(),
                "element": w.to_string(),
                "length": w.length(),
                "k": k,
                "specialize": args.specialize.name(),
                "format": args.format.name(),
                "result": render_json(&rendered)?,
            });
            if args.family == Family::D {
                envelope["symmetric"] = json!(symmetric);
            }
            println!("{envelope}");
        }
    }
    Ok(())
}

fn render_text(rendered: &Rendered) -> String {
    match rendered {
        Rendered::Poly(p) => p.to_string(),
        Rendered::Double(terms) => join_terms(
            terms
                .iter()
                .map(|(mu, nu, c)| (double_factor(mu, nu), c.clone()))
                .collect(),
        ),
        Rendered::Single(basis, terms) => join_terms(
            terms
                .iter()
                .map(|(shape, c)| (basis_factor(basis, shape), c.clone()))
                .collect(),
        ),
        Rendered::Graded(slices) => {
            let lines: Vec<String> = slices
                .iter()
                .map(|(power, terms)| {
                    let body = join_terms(
                        terms
                            .iter()
                            .map(|(shape, c)| (basis_factor("s", shape), c.clone()))
                            .collect(),
                    );
                    format!("t^{power}: {body}")
                })
                .collect();
            if lines.is_empty() {
                "0".to_string()
            } else {
                lines.join("\n")
            }
        }
    }
}

fn basis_factor(basis: &str, shape: &Partition) -> String {
    if shape.is_empty() {
        String::new()
    } else {
        format!("{basis}{shape}")
    }
}

fn double_factor(mu: &Partition, nu: &Partition) -> String {
    match (mu.is_empty(), nu.is_empty()) {
        (true, true) => String::new(),
        (false, true) => format!("s{mu}(x)"),
        (true, false) => format!("s{nu}(y)"),
        (false, false) => format!("s{mu}(x)*s{nu}(y)"),
    }
}

/// Render `coefficient * factor` terms with signs, or "0" for none.
fn join_terms(terms: Vec<(String, BigInt)>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (factor, c)) in terms.iter().enumerate() {
        if idx == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let abs = c.abs();
        if factor.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(factor);
        } else {
            out.push_str(&format!("{abs}*{factor}"));
        }
    }
    out
}

fn coeff_json(c: &BigInt) -> Result<serde_json::Value, Failure> {
    c.to_i64()
        .map(|v| json!(v))
        .ok_or_else(|| Failure::Domain(format!("coefficient {c} does not fit in JSON output")))
}

fn shape_json(p: &Partition) -> serde_json::Value {
    json!(p.parts())
}

fn single_json(terms: &[(Partition, BigInt)]) -> Result<serde_json::Value, Failure> {
    let mut out = Vec::with_capacity(terms.len());
    for (shape, c) in terms {
        out.push(json!({"shape": shape_json(shape), "c": coeff_json(c)?}));
    }
    Ok(json!(out))
}

fn render_json(rendered: &Rendered) -> Result<serde_json::Value, Failure> {
    match rendered {
        Rendered::Poly(p) => Ok(p.to_json()?),
        Rendered::Double(terms) => {
            let mut out = Vec::with_capacity(terms.len());
            for (mu, nu, c) in terms {
                out.push(json!({
                    "x": shape_json(mu),
                    "y": shape_json(nu),
                    "c": coeff_json(c)?,
                }));
            }
            Ok(json!(out))
        }
        Rendered::Single(basis, terms) => {
            Ok(json!({ "basis": basis, "terms": single_json(terms)? }))
        }
        Rendered::Graded(slices) => {
            let mut out = Vec::with_capacity(slices.len());
            for (power, terms) in slices {
                out.push(json!({"t": power, "terms": single_json(terms)?}));
            }
            Ok(json!(out))
        }
    }
}
