use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use mintrellis::charmat::{
    basis_at_cut, char_pair_direct, char_pair_reduced, displacement, dual_char, duality_report_parts,
    shift_displacement_check, sigma_and_rooks, transpose_check, unwrap_band, verify_characteristic,
    verify_characteristic_right, Board, CharPair, CircSpan,
};
use mintrellis::fixtures::{self, fixture};
use mintrellis::spanform::{bruhat_corner, lpu, reduce_msf, to_msf, Corner, Flavor};
use mintrellis::trellis::{
    bcjr_trellis, label_code, product_trellis, represents_one_to_one, trellis_duality_check, Direction, Sign,
    Trellis,
};
use mintrellis::text::format_matrix;
use mintrellis::{Mat, Report, Scalar};

use crate::input::{load, with_field, CliError, CliResult};
use crate::{Command, Construction, CornerArg, DirectionArg, LabelsArg, Method, RandomOpts, Side, TrellisOpts};

/// Text to print and whether every check passed.
pub struct Output {
    pub text: String,
    pub pass: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, pass: true }
    }
}

fn to_json<T: Serialize>(value: &T) -> CliResult<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn run(cmd: Command) -> CliResult<Output> {
    match cmd {
        Command::Msf { src, reduce, flavor } => {
            let t = load(&src.input)?;
            with_field!(t.p, F => msf::<F>(&t.to_mat()?, reduce, flavor, src.json))
        }
        Command::Lpu { src } => {
            let t = load(&src.input)?;
            with_field!(t.p, F => cmd_lpu::<F>(&t.to_mat()?, src.json))
        }
        Command::Bruhat { src, corner } => {
            let t = load(&src.input)?;
            with_field!(t.p, F => bruhat::<F>(&t.to_mat()?, corner, src.json))
        }
        Command::Char { src, method } => {
            let t = load(&src.input)?;
            with_field!(t.p, F => char_cmd::<F>(&t.to_mat()?, method, src.json))
        }
        Command::Trellis { src, opts } => {
            let t = load(&src.input)?;
            with_field!(t.p, F => trellis::<F>(&t.to_mat()?, &opts, src.json))
        }
        Command::Labelcode { src, rows, direction } => {
            let t = load(&src.input)?;
            with_field!(t.p, F => labelcode::<F>(&t.to_mat()?, rows.as_deref(), direction, src.json))
        }
        Command::Verify { input, json, x, random } => verify_cmd(input.as_deref(), json, x, &random),
        Command::Rooks { input, json, spans, period } => rooks(input.as_deref(), json, spans, period),
        Command::Band { src, windows } => {
            let t = load(&src.input)?;
            with_field!(t.p, F => band::<F>(&t.to_mat()?, windows))
        }
        Command::Fixture { name, matrix, golden } => fixture_cmd(name.as_deref(), matrix.as_deref(), golden.as_deref()),
    }
}

fn msf<F: Scalar>(g: &Mat<F>, reduce: bool, side: Side, json: bool) -> CliResult<Output> {
    let r = if reduce {
        let flavor = match side {
            Side::Left => Flavor::LeftOrderedRightReduced,
            Side::Right => Flavor::RightOrderedLeftReduced,
        };
        reduce_msf(g, flavor)?
    } else {
        to_msf(g)?
    };
    if json {
        return Ok(Output::ok(to_json(&r)?));
    }
    let mut s = format!("matrix:\n{}", format_matrix(&r.matrix));
    writeln!(s, "spans: {}", join(&r.spans)).unwrap();
    writeln!(s, "spanlength: {}", r.spanlength()).unwrap();
    writeln!(s, "leading pivots: {}", join(&r.leading_pivots)).unwrap();
    writeln!(s, "trailing pivots: {}", join(&r.trailing_pivots)).unwrap();
    Ok(Output::ok(s))
}

fn cmd_lpu<F: Scalar>(a: &Mat<F>, json: bool) -> CliResult<Output> {
    let f = lpu(a)?;
    if json {
        return Ok(Output::ok(to_json(&f)?));
    }
    Ok(Output::ok(format!("L:\n{}P:\n{}U:\n{}", f.l, f.p, f.u)))
}

fn bruhat<F: Scalar>(a: &Mat<F>, corner: CornerArg, json: bool) -> CliResult<Output> {
    let corner = match corner {
        CornerArg::Nw => Corner::Nw,
        CornerArg::Ne => Corner::Ne,
        CornerArg::Sw => Corner::Sw,
        CornerArg::Se => Corner::Se,
    };
    let p = bruhat_corner(a, corner)?;
    if json {
        return Ok(Output::ok(to_json(&json!({ "corner": corner, "permutation": p }))?));
    }
    Ok(Output::ok(p.to_string()))
}

fn spans_line(spans: &[CircSpan]) -> String {
    join(spans)
}

fn char_cmd<F: Scalar>(g: &Mat<F>, method: Method, json: bool) -> CliResult<Output> {
    let pair = match method {
        Method::Reduced => char_pair_reduced(g)?,
        Method::Direct => char_pair_direct(g)?,
    };
    let mut report = Report::new();
    report.extend("structure", pair.structure_report());
    report.extend("duality", duality_report_parts(&pair.x0, &pair.x1, &pair.y1, &pair.y0)?);
    if genuine(&pair) {
        report.extend("characteristic", verify_characteristic(&pair.x, &pair.g)?);
    }
    let pass = report.all_pass();
    if json {
        return Ok(Output { text: to_json(&json!({ "pair": pair, "report": report }))?, pass });
    }
    let mut s = format!("X:\n{}Y:\n{}", pair.x, pair.y);
    writeln!(s, "X spans: {}", spans_line(&pair.x_spans)).unwrap();
    writeln!(s, "Y spans: {}", spans_line(&pair.y_spans)).unwrap();
    writeln!(s, "sigma: {}", join(&pair.sigma)).unwrap();
    writeln!(s, "reduced: {}", pair.reduced).unwrap();
    write!(s, "{report}").unwrap();
    Ok(Output { text: s, pass })
}

fn trellis_text<F: Scalar>(t: &Trellis<F>) -> String {
    let mut s = t.label_table();
    writeln!(s, "state dims: {}", join(&t.state_dims())).unwrap();
    writeln!(s, "vertices: {}", join(&t.vertex_counts())).unwrap();
    s
}

fn trellis<F: Scalar>(g: &Mat<F>, opts: &TrellisOpts, json: bool) -> CliResult<Output> {
    let pair = char_pair_reduced(g)?;
    let rows = match &opts.rows {
        Some(r) => r.clone(),
        None => basis_at_cut(&pair, 0)?,
    };
    if let Some(&r) = rows.iter().find(|&&r| r >= pair.n) {
        return Err(CliError(format!("row {r} out of range 0..{}", pair.n)));
    }
    if opts.dual {
        let d = trellis_duality_check(&pair, &rows)?;
        let pass = d.report.all_pass();
        if json {
            return Ok(Output { text: to_json(&d)?, pass });
        }
        let mut s = format!("rows {} of X, labels from rows {} of Y:\n", join(&d.rows), join(&d.dual_rows));
        s += &trellis_text(&d.x_trellis);
        if let Some(y) = &d.y_trellis {
            writeln!(s, "rows {} of Y, labels from rows {} of X:", join(&d.dual_rows), join(&d.rows)).unwrap();
            s += &trellis_text(y);
        }
        write!(s, "{}", d.report).unwrap();
        return Ok(Output { text: s, pass });
    }
    let gens: Vec<(Vec<F>, CircSpan)> = rows.iter().map(|&r| (pair.x.row(r).to_vec(), pair.x_spans[r])).collect();
    let t = match opts.construction {
        Construction::Product => product_trellis(&gens)?,
        Construction::Bcjr => match opts.labels {
            LabelsArg::H => {
                let h = match &opts.parity {
                    Some(path) => load(path)?.to_mat::<F>()?,
                    None => pair.h.clone(),
                };
                bcjr_trellis(&gens, &h, Sign::Plus)?
            }
            LabelsArg::Y => {
                let rest: Vec<usize> = (0..pair.n).filter(|r| !rows.contains(r)).collect();
                let all: Vec<usize> = (0..pair.n).collect();
                bcjr_trellis(&gens, &pair.y.select(&rest, &all), Sign::Minus)?
            }
        },
    };
    let independent = pair.x.select_rows(&rows).has_full_row_rank();
    if !independent {
        eprintln!("warning: selected rows are dependent; the trellis is not one-to-one");
    }
    let one_to_one = represents_one_to_one(&t, &pair.g).ok();
    if opts.dot {
        let dot = t.to_dot()?;
        return Ok(Output::ok(match &opts.out {
            Some(path) => {
                std::fs::write(path, dot)?;
                format!("wrote {}\n", path.display())
            }
            None => dot,
        }));
    }
    if json {
        let v = json!({
            "trellis": t,
            "state_dims": t.state_dims(),
            "vertex_counts": t.vertex_counts(),
            "one_to_one": one_to_one,
        });
        return Ok(Output::ok(to_json(&v)?));
    }
    let mut s = trellis_text(&t);
    let o = one_to_one.map_or("unknown".to_string(), |b| b.to_string());
    writeln!(s, "one-to-one: {o}").unwrap();
    Ok(Output::ok(s))
}

fn labelcode<F: Scalar>(g: &Mat<F>, rows: Option<&[usize]>, dir: DirectionArg, json: bool) -> CliResult<Output> {
    let pair = char_pair_reduced(g)?;
    let direction = match dir {
        DirectionArg::YX => Direction::YLabelsX,
        DirectionArg::XY => Direction::XLabelsY,
    };
    let lc = label_code(&pair, direction, rows)?;
    let pass = lc.report.all_pass();
    if json {
        let rows: Vec<Option<String>> = (0..lc.n).map(|r| lc.row(r)).collect();
        let v = json!({ "direction": direction, "rows": rows, "report": lc.report });
        return Ok(Output { text: to_json(&v)?, pass });
    }
    Ok(Output { text: lc.render(), pass })
}

/// Whether every span is shorter than `n`. Otherwise the code or its dual
/// vanishes on a coordinate and the folded matrices lose their halves.
fn genuine<F: Scalar>(pair: &CharPair<F>) -> bool {
    pair.x_spans.iter().chain(&pair.y_spans).all(|s| s.len < pair.n)
}

/// Every identity the library checks, on one characteristic pair.
fn pair_suite<F: Scalar>(pair: &CharPair<F>, r: &mut Report) -> CliResult<()> {
    r.extend("structure", pair.structure_report());
    let dual = duality_report_parts(&pair.x0, &pair.x1, &pair.y1, &pair.y0)?;
    let in_duality = dual.all_pass();
    r.extend("duality", dual);
    let genuine = genuine(pair);
    if genuine {
        r.extend("characteristic", verify_characteristic(&pair.x, &pair.g)?);
        r.extend("characteristic_right", verify_characteristic_right(&pair.y, &pair.h)?);
    }
    if !in_duality {
        return Ok(());
    }
    r.extend("displacement", displacement(pair)?.report);
    r.extend("shift", shift_displacement_check(pair)?);
    if !genuine {
        return Ok(());
    }
    let t = transpose_check(pair)?;
    if pair.reduced {
        r.extend("transpose", t.report);
    } else {
        r.check("transpose.spanlength_exceeds_bound", t.xt_spanlength > t.bound);
    }
    r.extend("label_yx", label_code(pair, Direction::YLabelsX, None)?.report);
    r.extend("label_xy", label_code(pair, Direction::XLabelsY, None)?.report);
    Ok(())
}

fn verify_code<F: Scalar>(g: &Mat<F>) -> CliResult<Report> {
    let pair = char_pair_reduced(g)?;
    let mut r = Report::new();
    pair_suite(&pair, &mut r)?;
    Ok(r)
}

fn verify_x<F: Scalar>(x: &Mat<F>) -> CliResult<Report> {
    let k = x.rank();
    let g = x.rref_left().select_rows(&(0..k).collect::<Vec<_>>());
    let mut r = Report::new();
    r.extend("characteristic", verify_characteristic(x, &g)?);
    match dual_char(x) {
        Ok(pair) => {
            r.check("dual_char_exists", true);
            pair_suite(&pair, &mut r)?;
        }
        Err(_) => {
            r.check("dual_char_exists", false);
        }
    }
    Ok(r)
}

/// Random `k x n` matrix of rank `k`, drawn row by row from a seeded stream.
pub fn random_full_rank<F: Scalar>(k: usize, n: usize, rng: &mut ChaCha8Rng) -> Mat<F> {
    loop {
        let m = Mat::from_fn(k, n, |_, _| F::from_index(rng.gen_range(0..F::ORDER)));
        if m.has_full_row_rank() {
            return m;
        }
    }
}

fn verify_cmd(input: Option<&str>, json: bool, as_x: bool, random: &RandomOpts) -> CliResult<Output> {
    let (label, report) = if random.random {
        let RandomOpts { p, n, k, seed, .. } = *random;
        if k == 0 || k > n {
            return Err(CliError(format!("need 0 < k <= n, got k = {k}, n = {n}")));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let report = with_field!(p, F => verify_code(&random_full_rank::<F>(k, n, &mut rng)))?;
        (format!("random GF({p}) n={n} k={k} seed={seed}"), report)
    } else {
        let src = input.ok_or_else(|| CliError("give a matrix source or --random".into()))?;
        let t = load(src)?;
        let report = with_field!(t.p, F => {
            let m = t.to_mat::<F>()?;
            if as_x { verify_x(&m) } else { verify_code(&m) }
        })?;
        (src.to_string(), report)
    };
    let pass = report.all_pass();
    let text = if json {
        to_json(&json!({ "input": label, "all_pass": pass, "checks": report.checks }))?
    } else {
        let failed = report.failures().len();
        format!("{report}{} checks, {failed} failed\n", report.checks.len())
    };
    Ok(Output { text, pass })
}

fn parse_span(s: &str) -> CliResult<(i64, i64)> {
    let (a, b) = s.split_once(':').ok_or_else(|| CliError(format!("span {s:?} is not i:j")))?;
    let num = |x: &str| x.trim().parse::<i64>().map_err(|_| CliError(format!("bad number in span {s:?}")));
    Ok((num(a)?, num(b)?))
}

fn rooks(input: Option<&str>, json: bool, spans: Option<Vec<String>>, period: Option<usize>) -> CliResult<Output> {
    let board_out = |sigma: Option<Vec<usize>>, board: Board| -> CliResult<Output> {
        if json {
            return Ok(Output::ok(to_json(&json!({ "sigma": sigma, "board": board }))?));
        }
        let mut s = String::new();
        if let Some(sg) = &sigma {
            writeln!(s, "sigma: {}", join(sg)).unwrap();
        }
        s += &board.to_string();
        Ok(Output::ok(s))
    };
    if let Some(list) = spans {
        let n = period.ok_or_else(|| CliError("--spans needs --period".into()))?;
        if n == 0 {
            return Err(CliError("--period must be positive".into()));
        }
        let pairs = list.iter().map(|s| parse_span(s)).collect::<CliResult<Vec<_>>>()?;
        return board_out(None, Board::from_spans(n, &pairs));
    }
    let src = input.ok_or_else(|| CliError("give a matrix source or --spans".into()))?;
    if src == "fixture:suzuki" {
        return board_out(None, Board::from_spans(13, &fixtures::SUZUKI_SPANS));
    }
    let t = load(src)?;
    with_field!(t.p, F => {
        let pair = char_pair_reduced(&t.to_mat::<F>()?)?;
        let (sigma, board) = sigma_and_rooks(&pair);
        board_out(Some(sigma), board)
    })
}

fn band<F: Scalar>(g: &Mat<F>, windows: usize) -> CliResult<Output> {
    if windows == 0 {
        return Err(CliError("--windows must be positive".into()));
    }
    Ok(Output::ok(unwrap_band(&char_pair_reduced(g)?, windows)))
}

fn fixture_cmd(name: Option<&str>, matrix: Option<&str>, golden: Option<&str>) -> CliResult<Output> {
    let Some(name) = name else {
        let mut s = String::new();
        for f in fixtures::all() {
            writeln!(s, "{:<12} {}", f.name, f.summary).unwrap();
        }
        return Ok(Output::ok(s));
    };
    let f = fixture(name).ok_or_else(|| CliError(format!("unknown fixture {name:?}")))?;
    let names = |xs: &[(&str, String)]| xs.iter().map(|x| x.0).collect::<Vec<_>>().join(", ");
    let text = match (matrix, golden) {
        (_, Some(g)) => f
            .golden(g)
            .ok_or_else(|| CliError(format!("fixture {name:?} has no golden {g:?}; try {}", names(&f.golden))))?,
        (Some(m), None) => f
            .matrix(m)
            .ok_or_else(|| CliError(format!("fixture {name:?} has no matrix {m:?}; try {}", names(&f.matrices))))?,
        (None, None) => match f.code() {
            Some(c) => c,
            None => return Ok(Output::ok(format!("{}\ngolden: {}\n", f.summary, names(&f.golden)))),
        },
    };
    Ok(Output::ok(text.to_string()))
}
