//! JSON and CSV renderings of a [`TheoremReport`].

use crate::error::Result;
use crate::verify::{Invariants, TheoremReport};

impl Invariants {
    /// Every field in a fixed order, rendered as text; `None` if absent.
    pub fn fields(&self) -> [(&'static str, Option<String>); 12] {
        fn s<T: ToString>(v: &Option<T>) -> Option<String> {
            v.as_ref().map(ToString::to_string)
        }
        [
            ("dim", s(&self.dim)),
            ("index", s(&self.index)),
            ("rank", s(&self.rank)),
            ("rank_zero", s(&self.rank_zero)),
            ("quasired", s(&self.quasired)),
            ("stable", s(&self.stable)),
            ("unip_dim", s(&self.unip_dim)),
            ("stab_dim", s(&self.stab_dim)),
            ("basis_match", s(&self.basis_match)),
            ("reduced_dim", s(&self.reduced_dim)),
            ("reduced_rank", s(&self.reduced_rank)),
            ("reduced_stable", s(&self.reduced_stable)),
        ]
    }
}

/// Pretty JSON with a trailing newline. Field order follows the struct layout,
/// so equal reports give identical bytes.
pub fn to_json(report: &TheoremReport) -> Result<String> {
    let mut s = serde_json::to_string_pretty(report)?;
    s.push('\n');
    Ok(s)
}

pub fn from_json(s: &str) -> Result<TheoremReport> {
    Ok(serde_json::from_str(s)?)
}

/// One row per instance. Columns: identity, status, then `predicted_*` and
/// `computed_*` for every invariant, then notes joined by `"; "`.
pub fn to_csv(report: &TheoremReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let names = Invariants::default().fields().map(|(n, _)| n);
    let mut header = vec!["family".to_string(), "q".into(), "flag".into(), "status".into(), "agree".into()];
    for side in ["predicted", "computed"] {
        header.extend(names.iter().map(|n| format!("{side}_{n}")));
    }
    header.push("notes".into());
    w.write_record(&header)?;
    for rec in &report.instances {
        let status = serde_json::to_value(rec.status)?;
        let mut row = vec![
            rec.family.clone(),
            rec.q.to_string(),
            rec.flag.to_string(),
            status.as_str().unwrap_or_default().to_string(),
            rec.agree.to_string(),
        ];
        for inv in [&rec.predicted, &rec.computed] {
            row.extend(inv.fields().into_iter().map(|(_, v)| v.unwrap_or_default()));
        }
        row.push(rec.notes.join("; "));
        w.write_record(&row)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv writer emits UTF-8"))
}
