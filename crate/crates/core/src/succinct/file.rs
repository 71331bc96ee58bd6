//! Succinct model files:
//!
//! ```text
//! succinct classical m=2 vars x1 x2
//! labels model.labels.net
//! order model.order.net
//! ```
//!
//! Netlist paths are relative to the model file.

use std::path::{Path, PathBuf};

use super::{Mode, SuccinctModel};
use crate::circuits::{parse_netlist, print_netlist};
use crate::{Domain, Error, Result};

/// Parse a model file, fetching netlists through `load`.
pub fn parse_succinct(text: &str, load: &mut dyn FnMut(&str) -> Result<String>) -> Result<SuccinctModel> {
    let mut header: Option<(Mode, usize, Domain)> = None;
    let mut labels = None;
    let mut order = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        let mut toks = line.split_whitespace();
        let Some(keyword) = toks.next() else { continue };
        match keyword {
            "succinct" => {
                if header.is_some() {
                    return Err(Error::format(line_no, "duplicate header"));
                }
                let mode = match toks.next() {
                    Some("classical") => Mode::Classical,
                    Some("team") => Mode::Team,
                    _ => return Err(Error::format(line_no, "expected `classical` or `team`")),
                };
                let m = toks
                    .next()
                    .and_then(|t| t.strip_prefix("m="))
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| Error::format(line_no, "expected `m=<int>`"))?;
                if toks.next() != Some("vars") {
                    return Err(Error::format(line_no, "expected `vars`"));
                }
                let domain = Domain::new(toks).map_err(|e| Error::format(line_no, e.to_string()))?;
                header = Some((mode, m, domain));
            }
            "labels" | "order" => {
                let path = toks.next().ok_or_else(|| Error::format(line_no, "missing netlist path"))?;
                if toks.next().is_some() {
                    return Err(Error::format(line_no, "one path per line"));
                }
                let c = parse_netlist(&load(path)?)?;
                let slot = if keyword == "labels" { &mut labels } else { &mut order };
                if slot.replace(c).is_some() {
                    return Err(Error::format(line_no, format!("duplicate `{keyword}` line")));
                }
            }
            other => return Err(Error::format(line_no, format!("unknown keyword `{other}`"))),
        }
    }
    let (mode, m, domain) = header.ok_or_else(|| Error::format(0, "missing `succinct` header"))?;
    let labels = labels.ok_or_else(|| Error::format(0, "missing `labels` line"))?;
    let order = order.ok_or_else(|| Error::format(0, "missing `order` line"))?;
    if labels.num_inputs() != m {
        return Err(Error::Arity { expected: m, actual: labels.num_inputs() });
    }
    SuccinctModel::new(mode, &domain, labels, order)
}

pub fn load_succinct(path: &Path) -> Result<SuccinctModel> {
    let read = |p: &Path| {
        std::fs::read_to_string(p).map_err(|e| Error::Io { path: p.display().to_string(), msg: e.to_string() })
    };
    let text = read(path)?;
    let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
    parse_succinct(&text, &mut |rel| read(&base.join(rel)))
}

/// The model file text referring to the given netlist paths.
pub fn succinct_file_text(model: &SuccinctModel, labels_path: &str, order_path: &str) -> String {
    format!(
        "succinct {} m={} vars {}\nlabels {labels_path}\norder {order_path}\n",
        model.mode().name(),
        model.m(),
        model.domain()
    )
}

/// Write `path` and two netlists next to it. Returns the netlist paths.
pub fn save_succinct(model: &SuccinctModel, path: &Path) -> Result<(PathBuf, PathBuf)> {
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("model");
    let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
    let (ln, on) = (format!("{stem}.labels.net"), format!("{stem}.order.net"));
    let write = |p: &Path, text: String| {
        std::fs::write(p, text).map_err(|e| Error::Io { path: p.display().to_string(), msg: e.to_string() })
    };
    let (lp, op) = (base.join(&ln), base.join(&on));
    write(&lp, print_netlist(model.labels()))?;
    write(&op, print_netlist(model.order()))?;
    write(path, succinct_file_text(model, &ln, &on))?;
    Ok((lp, op))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_through_files() {
        let d = Domain::new(["x1", "x2", "x3"]).unwrap();
        let m = SuccinctModel::rlex_identity(&d);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("olms.succ");
        save_succinct(&m, &path).unwrap();
        let back = load_succinct(&path).unwrap();
        assert_eq!(back, m);
        assert!(back.is_declared_rlex());
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.starts_with("succinct classical m=3 vars x1 x2 x3\n"));
    }

    #[test]
    fn malformed_headers() {
        let mut none = |_: &str| -> Result<String> { Err(Error::Io { path: "x".into(), msg: "absent".into() }) };
        assert!(matches!(parse_succinct("succinct fuzzy m=1 vars p\n", &mut none), Err(Error::Format { line: 1, .. })));
        assert!(matches!(parse_succinct("succinct team m=x vars p\n", &mut none), Err(Error::Format { line: 1, .. })));
        assert!(matches!(parse_succinct("succinct team m=1 vars p\n", &mut none), Err(Error::Format { .. })));
        assert!(matches!(parse_succinct("labels a.net\n", &mut none), Err(Error::Io { .. })));
    }
}
