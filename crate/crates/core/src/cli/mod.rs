//! Command-line front end. [`run`] parses arguments, dispatches to the
//! library and returns the exit code together with the rendered output.

mod render;

use std::fmt::Write;
use std::path::PathBuf;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use crate::hfunc::{
    generating_crosscheck, normalize_sign, validate_lspace, wtj_polynomial, ClosedFormCheck, HError, HFunction,
    HTable, JView,
};
use crate::laurent::{fmt_half, ExponentVector, LatticeBox, LaurentPoly};
use crate::linkdata::{
    cable_alexander, catalog_entries, catalog_link, link_to_json, load_link, surgery_bound, torres_sublink,
    ComponentSet, LinkDescriptor,
};
use crate::semigroup::{
    branch_semigroup, bridge_check, germ_catalog, germ_catalog_entries, hilbert_property_suite, load_germ,
    semicontinuity_check, CurveGerm, HilbertOracle,
};
use crate::split::{check_concordance_inequality, check_crossing_inequality, splitting_lower_bound_in, CrossingKind};
use crate::violation::Violation;

pub use render::{parse_records, Format, Table};

#[derive(Parser, Debug)]
#[command(
    name = "lspace",
    version,
    about = "H-, J- and wtJ-functions of L-space links, splitting-number bounds and Hilbert functions of plane curve germs",
    after_help = "Examples:\n  lspace h --catalog whitehead --point 0,0\n  lspace table --catalog whitehead --box -2,-2:2,2\n  lspace wtj --catalog b85\n  lspace split-bound --catalog twobridge_Ln --n 3\n  lspace verify --suite lspace --catalog borromean\n  lspace semigroup --germ-catalog branch_4_6_13 --bound 30\n  lspace bridge --germ-catalog cusp --catalog torus_knot --pq 2,3"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Default)]
struct LinkArgs {
    /// Built-in link, optionally with parameters as NAME:P1,P2
    #[arg(long)]
    catalog: Option<String>,
    /// Link description file (JSON)
    #[arg(long)]
    link: Option<PathBuf>,
    /// Parameter n of a catalog link or germ
    #[arg(long)]
    n: Option<i64>,
    /// Parameters p,q of a catalog link (or of the cable for `cable`)
    #[arg(long, value_name = "P,Q")]
    pq: Option<String>,
    /// Fix the sign of the Alexander polynomial before computing
    #[arg(long)]
    normalize_sign: bool,
}

#[derive(Args, Debug, Clone, Default)]
struct GermArgs {
    /// Germ description file (JSON)
    #[arg(long)]
    germ: Option<PathBuf>,
    /// Built-in germ, optionally with parameters as NAME:P1
    #[arg(long)]
    germ_catalog: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct BoxArg {
    /// Box lo1,..:hi1,.. (a single lo:hi means a cube)
    #[arg(long = "box", value_name = "LO:HI", allow_hyphen_values = true)]
    bbox: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct FormatArg {
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the built-in links and germs
    Catalog,
    /// Alexander data of a link
    Show {
        #[command(flatten)]
        link: LinkArgs,
        /// Print the link as a link file
        #[arg(long)]
        emit_json: bool,
    },
    /// H(v) at a lattice point
    H {
        #[command(flatten)]
        link: LinkArgs,
        /// Lattice point, fractions allowed
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// J(m) at an integer point
    J {
        #[command(flatten)]
        link: LinkArgs,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// wtJ(m) at a point, or its generating polynomial over a box
    Wtj {
        #[command(flatten)]
        link: LinkArgs,
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        #[command(flatten)]
        bbox: BoxArg,
    },
    /// Table of H, J and wtJ over the lattice points of a box
    Table {
        #[command(flatten)]
        link: LinkArgs,
        #[command(flatten)]
        bbox: BoxArg,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Lower bound for the splitting number
    SplitBound {
        #[command(flatten)]
        link: LinkArgs,
        #[command(flatten)]
        bbox: BoxArg,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Alexander data of the (p,q) cable on the first component
    Cable {
        #[command(flatten)]
        link: LinkArgs,
        /// Print the result as a link file
        #[arg(long)]
        emit_json: bool,
    },
    /// Alexander polynomial of the sublink without one component
    Torres {
        #[command(flatten)]
        link: LinkArgs,
        /// Component to drop (1-based)
        #[arg(long)]
        drop: usize,
    },
    /// Framing vector beyond which all large surgeries are positive definite
    SurgeryBound {
        #[command(flatten)]
        link: LinkArgs,
    },
    /// Value semigroup of a branch
    Semigroup {
        #[command(flatten)]
        germ: GermArgs,
        /// Branch (1-based)
        #[arg(long, default_value_t = 1)]
        branch: usize,
        /// Compute values below this bound (default: the truncation order)
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long)]
        n: Option<i64>,
    },
    /// Hilbert function R(v) of a germ
    Hilbert {
        #[command(flatten)]
        germ: GermArgs,
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        #[command(flatten)]
        bbox: BoxArg,
        #[arg(long)]
        n: Option<i64>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Compare H and J of a link with the Hilbert function of a germ
    Bridge {
        #[command(flatten)]
        link: LinkArgs,
        #[command(flatten)]
        germ: GermArgs,
        #[command(flatten)]
        bbox: BoxArg,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Run a verification suite
    Verify {
        /// lspace, generating, hilbert, crossing, concordance or semicontinuity
        #[arg(long)]
        suite: String,
        #[command(flatten)]
        link: LinkArgs,
        #[command(flatten)]
        germ: GermArgs,
        /// Second link (NAME[:P1,P2] or a file) or second germ for semicontinuity
        #[arg(long)]
        against: Option<String>,
        /// same:I or between:I,J (1-based)
        #[arg(long)]
        kind: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        r: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<String>,
        #[command(flatten)]
        bbox: BoxArg,
        #[command(flatten)]
        format: FormatArg,
    },
}

/// Outcome of a command: exit code and text for standard output.
struct Outcome {
    code: i32,
    text: String,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { code: 0, text }
    }
}

/// Runs the CLI on `argv` (including the program name). Returns the exit
/// code (0 success, 1 violations, 2 usage or data error) and the output.
pub fn run<I, S>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    match dispatch(cli.command) {
        Ok(o) => (o.code, o.text),
        Err(e) => (2, format!("error: {:#}\n", e)),
    }
}

fn split_name(spec: &str) -> Result<(String, Option<Vec<i64>>)> {
    match spec.split_once(':') {
        Some((name, params)) => Ok((name.to_string(), Some(parse_ints(params)?))),
        None => Ok((spec.to_string(), None)),
    }
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|p| p.trim().parse::<i64>().with_context(|| format!("not an integer: {:?}", p)))
        .collect()
}

fn catalog_params(name: &str, args: &LinkArgs, use_pq: bool) -> Result<Vec<i64>> {
    let entry = catalog_entries()
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| anyhow!("unknown catalog link {:?}; see `lspace catalog`", name))?;
    match entry.params {
        "" => Ok(Vec::new()),
        "n" => Ok(vec![args.n.ok_or_else(|| anyhow!("{} needs --n", name))?]),
        _ => {
            let pq = args.pq.as_deref().filter(|_| use_pq);
            parse_ints(pq.ok_or_else(|| anyhow!("{} needs --pq P,Q", name))?)
        }
    }
}

fn resolve_link(args: &LinkArgs, use_pq: bool) -> Result<LinkDescriptor> {
    let link = match (&args.catalog, &args.link) {
        (Some(_), Some(_)) => bail!("give either --catalog or --link, not both"),
        (None, None) => bail!("a link is required: --catalog NAME or --link FILE"),
        (None, Some(path)) => load_link(path)?,
        (Some(spec), None) => {
            let (name, params) = split_name(spec)?;
            let params = match params {
                Some(p) => p,
                None => catalog_params(&name, args, use_pq)?,
            };
            catalog_link(&name, &params)?
        }
    };
    if args.normalize_sign {
        Ok(normalize_sign(&link)?)
    } else {
        Ok(link)
    }
}

fn link_from_spec(spec: &str) -> Result<LinkDescriptor> {
    let path = std::path::Path::new(spec);
    if path.is_file() {
        return Ok(load_link(path)?);
    }
    let (name, params) = split_name(spec)?;
    Ok(catalog_link(&name, &params.unwrap_or_default())?)
}

fn germ_from_spec(spec: &str, n: Option<i64>) -> Result<CurveGerm> {
    let path = std::path::Path::new(spec);
    if path.is_file() {
        return Ok(load_germ(path)?);
    }
    let (name, params) = split_name(spec)?;
    let params = match params {
        Some(p) => p,
        None => {
            let entry = germ_catalog_entries()
                .iter()
                .find(|e| e.name == name)
                .ok_or_else(|| anyhow!("unknown germ {:?}; see `lspace catalog`", name))?;
            if entry.params.is_empty() {
                Vec::new()
            } else {
                vec![n.ok_or_else(|| anyhow!("germ {} needs a parameter: {}:N or --n", name, name))?]
            }
        }
    };
    Ok(germ_catalog(&name, &params)?)
}

fn resolve_germ(args: &GermArgs, n: Option<i64>) -> Result<CurveGerm> {
    match (&args.germ, &args.germ_catalog) {
        (Some(_), Some(_)) => bail!("give either --germ or --germ-catalog, not both"),
        (None, None) => bail!("a germ is required: --germ FILE or --germ-catalog NAME"),
        (Some(path), None) => Ok(load_germ(path)?),
        (None, Some(spec)) => germ_from_spec(spec, n),
    }
}

fn parse_box(arg: &BoxArg, n: usize) -> Result<Option<LatticeBox>> {
    let Some(s) = &arg.bbox else { return Ok(None) };
    let b = LatticeBox::parse(s)?;
    let b = if b.nvars() == 1 && n > 1 {
        LatticeBox::new(
            ExponentVector::from_doubled(vec![b.lo.get(0); n]),
            ExponentVector::from_doubled(vec![b.hi.get(0); n]),
        )
    } else {
        b
    };
    if b.nvars() != n {
        bail!("box {} has {} coordinates, expected {}", s, b.nvars(), n);
    }
    Ok(Some(b))
}

fn integer_point(s: &str, n: usize) -> Result<Vec<i64>> {
    let v = ExponentVector::parse(s)?;
    if v.nvars() != n {
        bail!("point {} has {} coordinates, expected {}", s, v.nvars(), n);
    }
    v.to_integers().ok_or_else(|| anyhow!("point {} must be integral", s))
}

fn point_string(m: &[i64]) -> String {
    ExponentVector::from_integers(m).to_string()
}

fn var_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("t{}", i)).collect()
}

fn describe_link(link: &LinkDescriptor) -> String {
    let mut out = String::new();
    writeln!(out, "link: {}", link.name()).unwrap();
    let comps: Vec<String> = link
        .component_names()
        .iter()
        .zip(link.genus())
        .map(|(c, g)| format!("{} (genus {})", c, g))
        .collect();
    writeln!(out, "components: {}", comps.join(", ")).unwrap();
    let rows: Vec<String> = link
        .linking()
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    writeln!(out, "linking matrix: {}", rows.join(" / ")).unwrap();
    let names = var_names(link.n());
    let mut sets: Vec<_> = link.alexander_map().iter().collect();
    sets.sort_by_key(|(s, _)| (std::cmp::Reverse(s.len()), s.indices()));
    for (set, p) in sets {
        let local: Vec<&str> = set.indices().iter().map(|&i| names[i].as_str()).collect();
        writeln!(out, "Δ{{{}}} = {}", set, p.to_string_with_names(&local)).unwrap();
    }
    for note in link.notes() {
        writeln!(out, "note: {}", note).unwrap();
    }
    out
}

fn violations_outcome(title: &str, violations: &[Violation], format: Format) -> Outcome {
    if violations.is_empty() {
        return Outcome::ok(format!("{}: no violations\n", title));
    }
    let mut t = Table::new(["rule", "point", "detail"]);
    for v in violations {
        t.push([v.rule.clone(), v.point.clone(), v.detail.clone()]);
    }
    let mut text = String::new();
    if format != Format::Records {
        writeln!(text, "{}: {} violation(s)", title, violations.len()).unwrap();
    }
    text.push_str(&t.render(format));
    Outcome { code: 1, text }
}

fn text_format(f: &FormatArg) -> Format {
    f.format.unwrap_or(Format::Text)
}

fn dispatch(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Catalog => {
            let mut t = Table::new(["kind", "name", "params", "description"]);
            for e in catalog_entries() {
                t.push(["link", e.name, e.params, e.summary]);
            }
            for e in germ_catalog_entries() {
                t.push(["germ", e.name, e.params, e.summary]);
            }
            Ok(Outcome::ok(t.render(Format::Text)))
        }
        Command::Show { link, emit_json } => {
            let l = resolve_link(&link, true)?;
            Ok(Outcome::ok(if emit_json {
                link_to_json(&l) + "\n"
            } else {
                describe_link(&l)
            }))
        }
        Command::H { link, point } => {
            let l = resolve_link(&link, true)?;
            let v = ExponentVector::parse(&point)?;
            let h = HFunction::new(&l)?.h(&v)?;
            Ok(Outcome::ok(format!("H{} = {}\n", v, h)))
        }
        Command::J { link, point } => {
            let l = resolve_link(&link, true)?;
            let m = integer_point(&point, l.n())?;
            let j = HFunction::new(&l)?.j(&m)?;
            Ok(Outcome::ok(format!("J{} = {}\n", point_string(&m), j)))
        }
        Command::Wtj { link, point, bbox } => {
            let l = resolve_link(&link, true)?;
            if let Some(p) = point {
                let m = integer_point(&p, l.n())?;
                let w = HFunction::new(&l)?.wtj(&m)?;
                return Ok(Outcome::ok(format!("wtJ{} = {}\n", point_string(&m), w)));
            }
            let b = parse_box(&bbox, l.n())?.unwrap_or_else(|| l.probe_box());
            let w = wtj_polynomial(&l, &b)?;
            let names = var_names(l.n());
            let names: Vec<&str> = names.iter().map(String::as_str).collect();
            let check = match w.check {
                ClosedFormCheck::Agreed => "agrees with the two-component closed form",
                ClosedFormCheck::NotPolynomial => "closed form is not a Laurent polynomial",
                ClosedFormCheck::NotTwoComponent => "no closed form for this number of components",
            };
            Ok(Outcome::ok(format!(
                "wtJ = {}\nbox: {}\ncheck: {}\n",
                w.poly.to_string_with_names(&names),
                b,
                check
            )))
        }
        Command::Table { link, bbox, format } => {
            let l = resolve_link(&link, true)?;
            let b = parse_box(&bbox, l.n())?.unwrap_or_else(|| l.probe_box());
            let hf = Arc::new(HFunction::new(&l)?);
            let table = HTable::new(hf, b)?;
            let mut headers: Vec<String> = (1..=l.n()).map(|i| format!("v{}", i)).collect();
            headers.extend(["H", "J", "wtJ"].map(String::from));
            let mut t = Table::new(headers);
            for row in table.rows()? {
                let mut cells: Vec<String> = row.v.doubled().iter().map(|&d| fmt_half(d)).collect();
                cells.extend([row.h.to_string(), row.j.to_string(), row.wtj.to_string()]);
                t.push(cells);
            }
            Ok(Outcome::ok(t.render(format.format.unwrap_or(Format::Tsv))))
        }
        Command::SplitBound { link, bbox, format } => {
            let l = resolve_link(&link, true)?;
            let b = parse_box(&bbox, l.n())?.unwrap_or_else(|| l.probe_box());
            let r = splitting_lower_bound_in(&l, &b)?;
            let mut t = Table::new(["rule", "constraint", "point", "value"]);
            for w in &r.witnesses {
                let constraint = match w.rule.as_str() {
                    "wtj-max" => format!("t+ >= {}", w.value.max(0)),
                    "wtj-min" => format!("t- >= {}", (-w.value).max(0)),
                    _ => format!("t+ >= {}", r.t_plus_min),
                };
                t.push([w.rule.clone(), constraint, point_string(&w.point), w.value.to_string()]);
            }
            if let Some(lk) = r.linking_constraint {
                t.push(["linking".to_string(), format!("t- - t+ = {}", lk), "-".into(), lk.to_string()]);
            }
            let fmt = text_format(&format);
            let binding = if r.binding.is_empty() {
                "none".to_string()
            } else {
                r.binding.join(",")
            };
            let mut text = String::new();
            if fmt == Format::Records {
                text.push_str(&t.render(fmt));
                let mut s = Table::new(["bound", "t_plus", "t_minus", "binding"]);
                s.push([r.bound.to_string(), r.t_plus.to_string(), r.t_minus.to_string(), binding]);
                text.push_str(&s.render(fmt));
            } else {
                writeln!(text, "link: {}", l.name()).unwrap();
                text.push_str(&t.render(fmt));
                writeln!(text, "t+ = {}, t- = {}", r.t_plus, r.t_minus).unwrap();
                writeln!(text, "bound = {} (binding: {})", r.bound, binding).unwrap();
            }
            Ok(Outcome::ok(text))
        }
        Command::Cable { link, emit_json } => {
            let base = resolve_link(&link, false)?;
            let pq = parse_ints(link.pq.as_deref().ok_or_else(|| anyhow!("cable needs --pq P,Q"))?)?;
            if pq.len() != 2 {
                bail!("--pq needs two integers");
            }
            let c = cable_alexander(&base, pq[0], pq[1])?;
            Ok(Outcome::ok(if emit_json {
                link_to_json(&c) + "\n"
            } else {
                describe_link(&c)
            }))
        }
        Command::Torres { link, drop } => {
            let l = resolve_link(&link, true)?;
            if drop == 0 || drop > l.n() {
                bail!("--drop must be between 1 and {}", l.n());
            }
            let p = torres_sublink(&l, drop - 1)?;
            let rest = ComponentSet::full(l.n()).remove(drop - 1);
            let names = var_names(l.n());
            let local: Vec<&str> = rest.indices().iter().map(|&i| names[i].as_str()).collect();
            Ok(Outcome::ok(format!("Δ{{{}}} = {}\n", rest, p.to_string_with_names(&local))))
        }
        Command::SurgeryBound { link } => {
            let l = resolve_link(&link, true)?;
            let s = surgery_bound(&l)?;
            let mut text = format!("m = {}\n", point_string(&s.m));
            for row in &s.matrix {
                let cells: Vec<String> = row.iter().map(|x| format!("{:>4}", x)).collect();
                writeln!(text, "  [{}]", cells.join("")).unwrap();
            }
            writeln!(text, "positive definite: {}", if s.positive_definite { "yes" } else { "no" }).unwrap();
            Ok(Outcome::ok(text))
        }
        Command::Semigroup { germ, branch, bound, n } => {
            let g = resolve_germ(&germ, n)?;
            if branch == 0 || branch > g.n() {
                bail!("--branch must be between 1 and {}", g.n());
            }
            let b = &g.branches()[branch - 1];
            let s = branch_semigroup(b, bound.unwrap_or(b.truncation()))?;
            let gens: Vec<String> = s.generators().iter().map(|x| x.to_string()).collect();
            let below: Vec<String> = s
                .elements
                .iter()
                .filter(|&&x| x <= s.conductor)
                .map(|x| x.to_string())
                .collect();
            Ok(Outcome::ok(format!(
                "germ: {} branch {}\ngenerators: {}\nelements: {}, ...\ndelta = {}\nconductor = {}\nmultiplicity = {}\n",
                g.name,
                branch,
                gens.join(","),
                below.join(","),
                s.delta,
                s.conductor,
                s.multiplicity
            )))
        }
        Command::Hilbert { germ, point, bbox, n, format } => {
            let g = resolve_germ(&germ, n)?;
            let o = HilbertOracle::new(g)?;
            if let Some(p) = point {
                let v = integer_point(&p, o.n())?;
                let (r, cert) = o.r_certified(&v)?;
                return Ok(Outcome::ok(format!(
                    "R{} = {}\nranks at degree caps {}..{}: {:?}\n",
                    point_string(&v),
                    r,
                    cert.degree_cap,
                    cert.degree_cap + 2,
                    cert.ranks
                )));
            }
            let b = parse_box(&bbox, o.n())?.unwrap_or_else(|| LatticeBox::cube(o.n(), 0, 6));
            let mut headers: Vec<String> = (1..=o.n()).map(|i| format!("v{}", i)).collect();
            headers.push("R".into());
            let mut t = Table::new(headers);
            for v in b.integer_points() {
                let r = o.r(&v)?;
                let mut cells: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                cells.push(r.to_string());
                t.push(cells);
            }
            Ok(Outcome::ok(t.render(format.format.unwrap_or(Format::Tsv))))
        }
        Command::Bridge { link, germ, bbox, format } => {
            let l = resolve_link(&link, true)?;
            let g = resolve_germ(&germ, link.n)?;
            let o = HilbertOracle::new(g)?;
            let b = parse_box(&bbox, l.n())?.unwrap_or_else(|| LatticeBox::cube(l.n(), -3, 3));
            let v = bridge_check(&o, &l, &b)?;
            Ok(violations_outcome(
                &format!("bridge {} / {} on {}", o.germ().name, l.name(), b),
                &v,
                text_format(&format),
            ))
        }
        Command::Verify {
            suite,
            link,
            germ,
            against,
            kind,
            r,
            k,
            bbox,
            format,
        } => verify(&suite, &link, &germ, against, kind, r, k, &bbox, text_format(&format)),
    }
}

fn jview(l: &LinkDescriptor, b: &LatticeBox) -> Result<JView> {
    let hf = Arc::new(HFunction::new(l)?);
    let lattice_box = LatticeBox::new(&b.lo + hf.ell(), &b.hi + hf.ell());
    Ok(JView::new(Arc::new(HTable::new(hf, lattice_box)?)))
}

#[allow(clippy::too_many_arguments)]
fn verify(
    suite: &str,
    link: &LinkArgs,
    germ: &GermArgs,
    against: Option<String>,
    kind: Option<String>,
    r: Option<String>,
    k: Option<String>,
    bbox: &BoxArg,
    format: Format,
) -> Result<Outcome> {
    match suite {
        "lspace" => {
            let l = resolve_link(link, true)?;
            let b = parse_box(bbox, l.n())?.unwrap_or_else(|| l.probe_box());
            let v = validate_lspace(&l, &b)?;
            Ok(violations_outcome(&format!("lspace {} on {}", l.name(), b), &v, format))
        }
        "generating" => {
            let l = resolve_link(link, true)?;
            let b = parse_box(bbox, l.n())?.unwrap_or_else(|| l.probe_box());
            match generating_crosscheck(&l, &b) {
                Ok(count) => Ok(Outcome::ok(format!(
                    "generating {} on {}: {} point(s) agree\n",
                    l.name(),
                    b,
                    count
                ))),
                Err(HError::CrosscheckFailed(msg)) => Ok(Outcome {
                    code: 1,
                    text: format!("generating {}: {}\n", l.name(), msg),
                }),
                Err(e) => Err(e.into()),
            }
        }
        "hilbert" => {
            let o = HilbertOracle::new(resolve_germ(germ, link.n)?)?;
            let b = parse_box(bbox, o.n())?.unwrap_or_else(|| LatticeBox::cube(o.n(), 0, 6));
            let rep = hilbert_property_suite(&o, &b)?;
            let mut out = violations_outcome(&format!("hilbert {} on {}", o.germ().name, b), &rep.violations, format);
            if format != Format::Records {
                let show = |w: &Option<Vec<i64>>| w.as_ref().map_or("none in box".to_string(), |v| point_string(v));
                writeln!(out.text, "upper bound attained at {}", show(&rep.upper_witness)).unwrap();
                writeln!(out.text, "lower bound attained at {}", show(&rep.lower_witness)).unwrap();
            }
            Ok(out)
        }
        "crossing" | "concordance" => {
            let l1 = resolve_link(link, true)?;
            let spec = against.ok_or_else(|| anyhow!("--suite {} needs --against", suite))?;
            let l2 = link_from_spec(&spec)?;
            let b = parse_box(bbox, l1.n())?.unwrap_or_else(|| LatticeBox::cube(l1.n(), -4, 4));
            let (j1, j2) = (jview(&l1, &b)?, jview(&l2, &b)?);
            let v = if suite == "crossing" {
                let kind = parse_kind(kind.as_deref().ok_or_else(|| anyhow!("--suite crossing needs --kind"))?)?;
                check_crossing_inequality(&j1, &j2, kind, &b)?
            } else {
                let zeros = vec![0; l1.n()];
                let r = r.map(|s| parse_ints(&s)).transpose()?.unwrap_or_else(|| zeros.clone());
                let k = k.map(|s| parse_ints(&s)).transpose()?.unwrap_or(zeros);
                check_concordance_inequality(&j1, &j2, &r, &k, &b)?
            };
            Ok(violations_outcome(
                &format!("{} {} vs {} on {}", suite, l1.name(), l2.name(), b),
                &v,
                format,
            ))
        }
        "semicontinuity" => {
            let rt = HilbertOracle::new(resolve_germ(germ, link.n)?)?;
            let spec = against.ok_or_else(|| anyhow!("--suite semicontinuity needs --against GERM"))?;
            let r0 = HilbertOracle::new(germ_from_spec(&spec, link.n)?)?;
            let b = parse_box(bbox, rt.n())?.unwrap_or_else(|| LatticeBox::cube(rt.n(), 0, 6));
            let v = semicontinuity_check(&rt, &r0, &b)?;
            Ok(violations_outcome(
                &format!("semicontinuity {} vs {} on {}", rt.germ().name, r0.germ().name, b),
                &v,
                format,
            ))
        }
        other => bail!(
            "unknown suite {:?}; expected lspace, generating, hilbert, crossing, concordance or semicontinuity",
            other
        ),
    }
}

fn parse_kind(s: &str) -> Result<CrossingKind> {
    let (kind, idx) = s.split_once(':').ok_or_else(|| anyhow!("--kind is same:I or between:I,J"))?;
    let idx = parse_ints(idx)?;
    let zero_based = |i: i64| -> Result<usize> {
        if i < 1 {
            bail!("component indices are 1-based");
        }
        Ok((i - 1) as usize)
    };
    match (kind, idx.as_slice()) {
        ("same", [i]) => Ok(CrossingKind::SameComponent(zero_based(*i)?)),
        ("between", [i, j]) => Ok(CrossingKind::Between(zero_based(*i)?, zero_based(*j)?)),
        _ => bail!("--kind is same:I or between:I,J"),
    }
}

#[allow(dead_code)]
fn poly_names(p: &LaurentPoly) -> String {
    let names = var_names(p.nvars());
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    p.to_string_with_names(&names)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> (i32, String) {
        run(std::iter::once("lspace").chain(args.iter().copied()))
    }

    #[test]
    fn h_whitehead() {
        assert_eq!(cli(&["h", "--catalog", "whitehead", "--point", "0,0"]), (0, "H(0,0) = 1\n".into()));
    }

    #[test]
    fn split_bound_l3() {
        let (code, out) = cli(&["split-bound", "--catalog", "twobridge_Ln", "--n", "3"]);
        assert_eq!(code, 0);
        assert!(out.contains("bound = 6"), "{}", out);
        assert!(out.contains("vanishing"));
    }

    #[test]
    fn verify_borromean() {
        let (code, out) = cli(&["verify", "--suite", "lspace", "--catalog", "borromean"]);
        assert_eq!(code, 0, "{}", out);
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(cli(&["h", "--point", "0,0"]).0, 2);
        assert_eq!(cli(&["bogus"]).0, 2);
        assert_eq!(cli(&["h", "--catalog", "whitehead", "--point", "1/2,0"]).0, 2);
        assert_eq!(cli(&["--help"]).0, 0);
    }

    #[test]
    fn violations_exit_1() {
        let (code, out) = cli(&[
            "verify", "--suite", "crossing", "--catalog", "whitehead", "--against", "unlink:2", "--kind", "same:1",
        ]);
        assert_eq!(code, 1, "{}", out);
    }
}
