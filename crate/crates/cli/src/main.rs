//! `quiverc`: command-line front end to `quiverc-core`.
//!
//! Exit status is 0 on success, 2 on a usage error and 1 on a domain error,
//! which is reported on stderr as `{"error": {"kind": …, "message": …}}`.

mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quiverc_core::linrep::{
    decompose, ext1_dim, hom_dim, indec_of_real_root, reflect_minus, reflect_plus, FieldSpec, Representation,
    RepresentationJson,
};
use quiverc_core::roots::default_search_bound;
use quiverc_core::torsion::{indec_name, TorsionFreeClass, TorsionFreeClassJson};
use quiverc_core::weyl::{inversion_set, reduce_word};
use quiverc_core::{
    classify_vector, enumerate_c_sortable, enumerate_tfc, is_c_sortable, positive_real_roots, sortable_of_tfc,
    tfc_of_sortable, verify_bijection, Error, IntVector, LengthBound, Quiver, VertexKind, WeylElement, Word,
};
use serde_json::{json, Value};

use render::Rendered;

#[derive(Parser, Debug)]
#[command(name = "quiverc", version, about = "Quivers, Weyl groups, sortable elements and torsion-free classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Inspect or mutate a quiver.
    #[command(subcommand)]
    Quiver(QuiverCmd),
    /// Euler and symmetric bilinear forms.
    #[command(subcommand)]
    Form(FormCmd),
    /// Words in the Weyl group.
    #[command(subcommand)]
    Weyl(WeylCmd),
    /// Real roots and classification of dimension vectors.
    #[command(subcommand)]
    Roots(RootsCmd),
    /// Sortable elements for the Coxeter element of the quiver.
    #[command(subcommand)]
    Sortable(SortableCmd),
    /// Representations over a prime field.
    #[command(subcommand)]
    Rep(RepCmd),
    /// Torsion-free classes.
    #[command(subcommand)]
    Tfc(TfcCmd),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Json,
    Table,
}

#[derive(Args, Debug)]
struct Common {
    /// Quiver file: {"n": 3, "arrows": [[1,2],[3,2]]}
    #[arg(long, value_name = "PATH")]
    quiver: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args, Debug)]
struct WithField {
    #[command(flatten)]
    common: Common,
    /// Prime field F_p, p in {2, 3, 5}.
    #[arg(long, default_value_t = 2)]
    field: u32,
}

#[derive(Subcommand, Debug)]
enum QuiverCmd {
    /// Arrows, vertex kinds and Dynkin type.
    Show(Common),
    /// Reverse every arrow at a sink or source.
    Mutate {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        vertex: usize,
    },
    /// Dynkin type of the underlying graph.
    Type(Common),
}

#[derive(Args, Debug)]
struct Pair {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_name = "i,j,…")]
    beta: String,
    #[arg(long, value_name = "i,j,…")]
    gamma: String,
}

#[derive(Subcommand, Debug)]
enum FormCmd {
    /// ⟨β, γ⟩
    Euler(Pair),
    /// (β, γ) = ⟨β, γ⟩ + ⟨γ, β⟩
    Sym(Pair),
}

#[derive(Args, Debug)]
struct WordArgs {
    #[command(flatten)]
    common: Common,
    /// Letters separated by commas; empty for the identity.
    #[arg(long, value_name = "i,j,…", allow_hyphen_values = true)]
    word: String,
}

#[derive(Subcommand, Debug)]
enum WeylCmd {
    /// Inversion set of a reduced word, in word order.
    Inv(WordArgs),
    /// Reduced word for the same element.
    Reduce(WordArgs),
    /// Left descents, or whether `--vertex` is one.
    Descent {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long)]
        vertex: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum RootsCmd {
    /// Positive real roots up to a height bound (all of them for Dynkin quivers).
    List {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        height_bound: Option<usize>,
    },
    /// real_positive, real_negative, imaginary, not_a_root or inconclusive.
    Classify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "i,j,…", allow_hyphen_values = true)]
        vector: String,
        #[arg(long)]
        search_bound: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum SortableCmd {
    Check(WordArgs),
    /// Sortable elements sorted by length, then word.
    Enumerate {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        max_length: Option<usize>,
    },
    Count {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        max_length: Option<usize>,
    },
}

#[derive(Args, Debug)]
struct RepPair {
    #[command(flatten)]
    common: Common,
    /// Representation file: {"field": 2, "dims": […], "mats": {"0": [[…]], …}}
    #[arg(long, value_name = "PATH")]
    rep: PathBuf,
    #[arg(long, value_name = "PATH")]
    rep2: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Direction {
    Plus,
    Minus,
}

#[derive(Subcommand, Debug)]
enum RepCmd {
    /// dim Hom(V, W)
    Hom(RepPair),
    /// dim Ext¹(V, W)
    Ext(RepPair),
    /// Reflection functor at a sink (plus) or source (minus).
    Reflect {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "PATH")]
        rep: PathBuf,
        #[arg(long)]
        vertex: usize,
        /// Defaults to plus at a sink and minus at a source.
        #[arg(long, value_enum)]
        direction: Option<Direction>,
    },
    /// Indecomposable summands with multiplicities (Dynkin quivers).
    Decompose {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "PATH")]
        rep: PathBuf,
    },
    /// The indecomposable with a given dimension vector (Dynkin quivers).
    Indec {
        #[command(flatten)]
        with_field: WithField,
        #[arg(long, value_name = "i,j,…")]
        vector: String,
    },
}

#[derive(Subcommand, Debug)]
enum TfcCmd {
    /// F(w) for a sortable element.
    OfWord {
        #[command(flatten)]
        with_field: WithField,
        #[arg(long, value_name = "i,j,…", allow_hyphen_values = true)]
        word: String,
    },
    /// The sortable element of a torsion-free class.
    ToWord {
        /// Class file: {"quiver": {…}, "roots": [[…], …]}
        #[arg(long, value_name = "PATH")]
        class: PathBuf,
        #[arg(long, default_value_t = 2)]
        field: u32,
        /// Skip the brute-force torsion-free check.
        #[arg(long)]
        trust: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// All torsion-free classes (Dynkin quivers with at most 12 indecomposables).
    Enumerate(WithField),
    /// Check the sortable / torsion-free correspondence.
    Verify(WithField),
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Error> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn load_quiver(common: &Common) -> Result<Quiver, Error> {
    read_json(&common.quiver)
}

fn load_rep(q: &Quiver, path: &Path) -> Result<Representation, Error> {
    let json: RepresentationJson = read_json(path)?;
    Representation::from_json(q, &json)
}

fn parse_word(text: &str) -> Result<Word, Error> {
    text.parse()
}

fn parse_vector(text: &str, n: usize) -> Result<IntVector, Error> {
    let coords = text
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|e| Error::Parse(format!("bad coordinate {t:?}: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let v = IntVector::from_i64s(&coords);
    v.check_len(n)?;
    Ok(v)
}

fn length_bound(max_length: Option<usize>) -> LengthBound {
    max_length.map_or(LengthBound::Unbounded, LengthBound::Finite)
}

fn run(command: Command) -> Result<(Rendered, Format), Error> {
    match command {
        Command::Quiver(cmd) => quiver_cmd(cmd),
        Command::Form(cmd) => form_cmd(cmd),
        Command::Weyl(cmd) => weyl_cmd(cmd),
        Command::Roots(cmd) => roots_cmd(cmd),
        Command::Sortable(cmd) => sortable_cmd(cmd),
        Command::Rep(cmd) => rep_cmd(cmd),
        Command::Tfc(cmd) => tfc_cmd(cmd),
    }
}

fn quiver_cmd(cmd: QuiverCmd) -> Result<(Rendered, Format), Error> {
    match cmd {
        QuiverCmd::Show(common) => {
            let q = load_quiver(&common)?;
            let kinds = (1..=q.n()).map(|i| q.vertex_kind(i)).collect::<Result<Vec<VertexKind>, _>>()?;
            let json = json!({
                "n": q.n(),
                "arrows": q.arrows().iter().map(|a| [a.source, a.target]).collect::<Vec<_>>(),
                "vertex_kinds": kinds,
                "type": q.dynkin_type().to_string(),
            });
            let mut table = format!("{q}\ntype: {}\n", q.dynkin_type());
            for (i, k) in kinds.iter().enumerate() {
                table.push_str(&format!("{}: {}\n", i + 1, k.name()));
            }
            Ok((Rendered::new(json, table), common.format))
        }
        QuiverCmd::Mutate { common, vertex } => {
            let q = load_quiver(&common)?.mutate_at(vertex)?;
            Ok((Rendered::new(serde_json::to_value(&q).expect("quiver serializes"), format!("{q}\n")), common.format))
        }
        QuiverCmd::Type(common) => {
            let t = load_quiver(&common)?.dynkin_type().to_string();
            Ok((Rendered::new(json!(t), format!("{t}\n")), common.format))
        }
    }
}

fn form_cmd(cmd: FormCmd) -> Result<(Rendered, Format), Error> {
    let (pair, sym) = match cmd {
        FormCmd::Euler(p) => (p, false),
        FormCmd::Sym(p) => (p, true),
    };
    let q = load_quiver(&pair.common)?;
    let beta = parse_vector(&pair.beta, q.n())?;
    let gamma = parse_vector(&pair.gamma, q.n())?;
    let value = if sym { q.sym_form(&beta, &gamma)? } else { q.euler_form(&beta, &gamma)? };
    Ok((Rendered::integer(&value), pair.common.format))
}

fn weyl_cmd(cmd: WeylCmd) -> Result<(Rendered, Format), Error> {
    match cmd {
        WeylCmd::Inv(args) => {
            let q = load_quiver(&args.common)?;
            let word = parse_word(&args.word)?;
            let inv = inversion_set(&q, &word)?;
            let mut table = String::new();
            for (k, (letter, root)) in word.letters().iter().zip(&inv.roots).enumerate() {
                table.push_str(&format!("{}  s{letter}  {root}\n", k + 1));
            }
            Ok((Rendered::new(serde_json::to_value(&inv.roots).expect("roots serialize"), table), args.common.format))
        }
        WeylCmd::Reduce(args) => {
            let q = load_quiver(&args.common)?;
            let reduced = reduce_word(&q, &parse_word(&args.word)?)?;
            Ok((Rendered::new(json!(reduced.letters()), format!("{reduced}\n")), args.common.format))
        }
        WeylCmd::Descent { word, vertex } => {
            let q = load_quiver(&word.common)?;
            let w = WeylElement::from_word(&q, &parse_word(&word.word)?)?;
            match vertex {
                Some(i) => {
                    q.check_vertex(i)?;
                    let d = w.left_descent(i)?;
                    Ok((Rendered::new(json!(d), format!("{d}\n")), word.common.format))
                }
                None => {
                    let mut descents = Vec::new();
                    for i in 1..=q.n() {
                        if w.left_descent(i)? {
                            descents.push(i);
                        }
                    }
                    let table = descents.iter().map(|i| format!("s{i}\n")).collect();
                    Ok((Rendered::new(json!(descents), table), word.common.format))
                }
            }
        }
    }
}

fn roots_cmd(cmd: RootsCmd) -> Result<(Rendered, Format), Error> {
    match cmd {
        RootsCmd::List { common, height_bound } => {
            let q = load_quiver(&common)?;
            let bound = match height_bound {
                Some(b) => b,
                None if q.dynkin_type().is_dynkin() => usize::MAX,
                None => {
                    return Err(Error::UnsupportedScope(
                        "infinitely many real roots; pass --height-bound".into(),
                    ))
                }
            };
            let set = positive_real_roots(&q, bound)?;
            let table = set.roots.iter().map(|r| format!("{r}\n")).collect::<String>()
                + &format!("{} roots, complete: {}\n", set.roots.len(), set.complete);
            Ok((Rendered::new(serde_json::to_value(&set).expect("roots serialize"), table), common.format))
        }
        RootsCmd::Classify { common, vector, search_bound } => {
            let q = load_quiver(&common)?;
            let v = parse_vector(&vector, q.n())?;
            let bound = search_bound.unwrap_or_else(|| default_search_bound(&v));
            let class = match classify_vector(&q, &v, bound) {
                Ok(c) => serde_json::to_value(c).expect("class serializes"),
                Err(Error::Inconclusive(_)) => json!("inconclusive"),
                Err(e) => return Err(e),
            };
            let table = format!("{}\n", class.as_str().unwrap_or_default());
            Ok((Rendered::new(class, table), common.format))
        }
    }
}

fn words_table(ws: &[WeylElement]) -> String {
    ws.iter().map(|w| format!("{}\n", w.word())).collect()
}

fn sortable_cmd(cmd: SortableCmd) -> Result<(Rendered, Format), Error> {
    match cmd {
        SortableCmd::Check(args) => {
            let q = load_quiver(&args.common)?;
            let w = WeylElement::from_word(&q, &parse_word(&args.word)?)?;
            let ok = is_c_sortable(&q, &w)?;
            Ok((Rendered::new(json!(ok), format!("{ok}\n")), args.common.format))
        }
        SortableCmd::Enumerate { common, max_length } => {
            let q = load_quiver(&common)?;
            let ws = enumerate_c_sortable(&q, length_bound(max_length))?;
            let json = json!(ws.iter().map(|w| w.word().letters().to_vec()).collect::<Vec<_>>());
            Ok((Rendered::new(json, words_table(&ws)), common.format))
        }
        SortableCmd::Count { common, max_length } => {
            let q = load_quiver(&common)?;
            let n = enumerate_c_sortable(&q, length_bound(max_length))?.len();
            Ok((Rendered::new(json!(n), format!("{n}\n")), common.format))
        }
    }
}

fn rep_json(v: &Representation) -> Value {
    json!({
        "quiver": serde_json::to_value(v.quiver()).expect("quiver serializes"),
        "rep": serde_json::to_value(v.to_json()).expect("representation serializes"),
    })
}

fn rep_table(v: &Representation) -> String {
    let mut out = format!("{}\ndims {}\n", v.quiver(), v.dim_vector());
    for (id, a) in v.quiver().arrows().iter().enumerate() {
        out.push_str(&format!("arrow {id}: {} -> {}\n{}", a.source, a.target, render::matrix_rows(v.map(id))));
    }
    out
}

fn rep_cmd(cmd: RepCmd) -> Result<(Rendered, Format), Error> {
    match cmd {
        RepCmd::Hom(pair) => {
            let q = load_quiver(&pair.common)?;
            let d = hom_dim(&load_rep(&q, &pair.rep)?, &load_rep(&q, &pair.rep2)?)?;
            Ok((Rendered::new(json!(d), format!("{d}\n")), pair.common.format))
        }
        RepCmd::Ext(pair) => {
            let q = load_quiver(&pair.common)?;
            let d = ext1_dim(&load_rep(&q, &pair.rep)?, &load_rep(&q, &pair.rep2)?)?;
            Ok((Rendered::new(json!(d), format!("{d}\n")), pair.common.format))
        }
        RepCmd::Reflect { common, rep, vertex, direction } => {
            let q = load_quiver(&common)?;
            let v = load_rep(&q, &rep)?;
            let direction = match direction {
                Some(d) => d,
                None if q.vertex_kind(vertex)? == VertexKind::Source => Direction::Minus,
                None => Direction::Plus,
            };
            let r = match direction {
                Direction::Plus => reflect_plus(&v, vertex)?,
                Direction::Minus => reflect_minus(&v, vertex)?,
            };
            Ok((Rendered::new(rep_json(&r), rep_table(&r)), common.format))
        }
        RepCmd::Decompose { common, rep } => {
            let q = load_quiver(&common)?;
            let parts = decompose(&load_rep(&q, &rep)?)?;
            let json = json!(parts
                .iter()
                .map(|(r, m)| json!({"root": r, "multiplicity": m}))
                .collect::<Vec<_>>());
            let table = parts
                .iter()
                .map(|(r, m)| format!("{m} x {} {r}\n", indec_name(&q, r)))
                .collect();
            Ok((Rendered::new(json, table), common.format))
        }
        RepCmd::Indec { with_field, vector } => {
            let q = load_quiver(&with_field.common)?;
            let field = FieldSpec::new(with_field.field)?;
            let m = indec_of_real_root(&q, field, &parse_vector(&vector, q.n())?)?;
            Ok((Rendered::new(rep_json(&m), rep_table(&m)), with_field.common.format))
        }
    }
}

fn class_rendered(c: &TorsionFreeClass) -> Rendered {
    Rendered::new(serde_json::to_value(c.to_json()).expect("class serializes"), format!("{}\n", c.describe()))
}

fn tfc_cmd(cmd: TfcCmd) -> Result<(Rendered, Format), Error> {
    match cmd {
        TfcCmd::OfWord { with_field, word } => {
            let q = load_quiver(&with_field.common)?;
            let field = FieldSpec::new(with_field.field)?;
            let w = WeylElement::from_word(&q, &parse_word(&word)?)?;
            Ok((class_rendered(&tfc_of_sortable(&q, field, &w)?), with_field.common.format))
        }
        TfcCmd::ToWord { class, field, trust, format } => {
            let json: TorsionFreeClassJson = read_json(&class)?;
            let c = TorsionFreeClass::from_json(&json, FieldSpec::new(field)?)?;
            let w = sortable_of_tfc(&c, !trust)?;
            Ok((Rendered::new(json!(w.word().letters()), format!("{}\n", w.word())), format))
        }
        TfcCmd::Enumerate(with_field) => {
            let q = load_quiver(&with_field.common)?;
            let classes = enumerate_tfc(&q, FieldSpec::new(with_field.field)?)?;
            let json = json!(classes.iter().map(|c| c.roots().iter().collect::<Vec<_>>()).collect::<Vec<_>>());
            let table = classes.iter().map(|c| format!("{}\n", c.describe())).collect();
            Ok((Rendered::new(json, table), with_field.common.format))
        }
        TfcCmd::Verify(with_field) => {
            let q = load_quiver(&with_field.common)?;
            let report = verify_bijection(&q, FieldSpec::new(with_field.field)?)?;
            Ok((
                Rendered::new(serde_json::to_value(&report).expect("report serializes"), report.table()),
                with_field.common.format,
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((rendered, format)) => {
            print!("{}", rendered.emit(format == Format::Table));
            ExitCode::SUCCESS
        }
        Err(e) => {
            let body = json!({"error": {"kind": e.kind(), "message": e.to_string()}});
            eprintln!("{body}");
            ExitCode::from(1)
        }
    }
}
