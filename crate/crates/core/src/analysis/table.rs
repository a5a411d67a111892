//! Comparison tables: the recursive MN scheme against the plain MN scheme
//! and against memory sharing, rendered as CSV or GitHub markdown.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;

use super::reference::{MN_SHARE_PUBLISHED, THREE_WAY_PUBLISHED};
use super::{
    base_points_lemma2_family, base_points_mn, best_share, mn_ratio, render_decimal,
    render_fraction, AnalysisError,
};
use crate::construct::params::{params_theorem3, split};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableId {
    /// Recursive MN scheme against the MN scheme on all `K` users.
    MnVsOurs,
    /// Recursive MN scheme against memory sharing over MN points.
    Table2,
    /// Adds memory sharing over one `((m+1)q, …)` family.
    Table3,
}

impl FromStr for TableId {
    type Err = AnalysisError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "mn_vs_ours" => Ok(TableId::MnVsOurs),
            "table2" => Ok(TableId::Table2),
            "table3" => Ok(TableId::Table3),
            other => Err(AnalysisError::Domain(format!("unknown table id {other:?}"))),
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableId::MnVsOurs => "mn_vs_ours",
            TableId::Table2 => "table2",
            TableId::Table3 => "table3",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Markdown,
}

impl FromStr for TableFormat {
    type Err = AnalysisError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(TableFormat::Csv),
            "md" | "markdown" => Ok(TableFormat::Markdown),
            other => Err(AnalysisError::Domain(format!("unknown format {other:?}"))),
        }
    }
}

/// One row's inputs: the user split, the MN cache parameter on `K1` users,
/// and for the three-way table the `(q, m)` family to share over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RowParams {
    pub k1: u64,
    pub k2: u64,
    pub t: u64,
    pub family: Option<(u64, u64)>,
}

impl RowParams {
    pub fn new(k1: u64, k2: u64, t: u64) -> Self {
        RowParams {
            k1,
            k2,
            t,
            family: None,
        }
    }

    pub fn with_family(self, q: u64, m: u64) -> Self {
        RowParams {
            family: Some((q, m)),
            ..self
        }
    }
}

/// The row parameters each table is published with.
pub fn default_rows(id: TableId) -> Vec<RowParams> {
    match id {
        TableId::MnVsOurs => (1..=8)
            .map(|i| RowParams::new(4 * i, 2 * i, 2 * i))
            .collect(),
        TableId::Table2 => MN_SHARE_PUBLISHED
            .iter()
            .map(|&(k1, k2, t, ..)| RowParams::new(k1, k2, t))
            .collect(),
        TableId::Table3 => {
            let families = [(6, 2), (5, 3), (4, 6), (5, 6), (19, 1), (4, 10)];
            THREE_WAY_PUBLISHED
                .iter()
                .zip(families)
                .map(|(&(k1, k2, t, ..), (q, m))| RowParams::new(k1, k2, t).with_family(q, m))
                .collect()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaselineKind {
    /// MN scheme on all `K` users at the same memory ratio.
    Mn,
    /// Best one- or two-point memory sharing over the `K + 1` MN points.
    MnShared,
    /// Best memory sharing over one `((m+1)q, …)` family.
    Lemma2Shared,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Baseline {
    pub kind: BaselineKind,
    pub rate: BigRational,
    pub packets: BigUint,
    /// Published `(R, F)` for the same row, when there is one.
    pub published: Option<(&'static str, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonRow {
    pub k: u64,
    pub k1: u64,
    pub k2: u64,
    pub h1: u64,
    pub h2: u64,
    pub t: u64,
    pub family: Option<(u64, u64)>,
    pub memory_ratio: BigRational,
    pub rate: BigRational,
    pub packets: BigUint,
    pub baselines: Vec<Baseline>,
}

impl ComparisonRow {
    pub fn baseline(&self, kind: BaselineKind) -> Option<&Baseline> {
        self.baselines.iter().find(|b| b.kind == kind)
    }

    /// `R / R_base`.
    pub fn rate_ratio(&self, kind: BaselineKind) -> Option<BigRational> {
        self.baseline(kind).map(|b| &self.rate / &b.rate)
    }

    /// `F / F_base`.
    pub fn packet_ratio(&self, kind: BaselineKind) -> Option<BigRational> {
        self.baseline(kind)
            .map(|b| BigRational::new(self.packets.clone().into(), b.packets.clone().into()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub id: TableId,
    pub rows: Vec<ComparisonRow>,
}

fn published_mn_share(p: &RowParams) -> Option<(&'static str, u64)> {
    MN_SHARE_PUBLISHED
        .iter()
        .find(|e| (e.0, e.1, e.2) == (p.k1, p.k2, p.t))
        .map(|e| (e.3, e.4))
}

fn published_three_way(
    p: &RowParams,
) -> Option<&'static (u64, u64, u64, &'static str, u64, &'static str, u64)> {
    THREE_WAY_PUBLISHED
        .iter()
        .find(|e| (e.0, e.1, e.2) == (p.k1, p.k2, p.t))
}

fn build_row(id: TableId, p: &RowParams) -> Result<ComparisonRow, AnalysisError> {
    let ours = params_theorem3(p.k1, p.k2, p.t)?;
    let (_, h1, h2) = split(p.k1, p.k2);
    let k = p.k1 + p.k2;
    let memory_ratio = ours.memory_ratio();
    let rate = ours.rate();

    let mut baselines = Vec::new();
    match id {
        TableId::MnVsOurs => {
            let m = mn_ratio(p.k1, p.k2, p.t)?;
            baselines.push(Baseline {
                kind: BaselineKind::Mn,
                rate: m.rate_mn,
                packets: m.packets_mn,
                published: None,
            });
        }
        TableId::Table2 | TableId::Table3 => {
            let published = published_three_way(p);
            if id == TableId::Table3 {
                let (q, m) = p.family.ok_or_else(|| {
                    AnalysisError::Domain("three-way rows need a (q, m) family".into())
                })?;
                if (m + 1) * q != k {
                    return Err(AnalysisError::Domain(format!(
                        "family (q={q}, m={m}) has (m+1)q != K = {k}"
                    )));
                }
                let family = base_points_lemma2_family(q, m)?;
                let choice = best_share(&family, &memory_ratio, &rate)?;
                baselines.push(Baseline {
                    kind: BaselineKind::Lemma2Shared,
                    rate: choice.point.rate().clone(),
                    packets: choice.point.packets().clone(),
                    published: published.map(|e| (e.3, e.4)),
                });
            }
            let choice = best_share(&base_points_mn(k), &memory_ratio, &rate)?;
            let published_mn = match id {
                TableId::Table2 => published_mn_share(p),
                _ => published.map(|e| (e.5, e.6)),
            };
            baselines.push(Baseline {
                kind: BaselineKind::MnShared,
                rate: choice.point.rate().clone(),
                packets: choice.point.packets().clone(),
                published: published_mn,
            });
        }
    }

    Ok(ComparisonRow {
        k,
        k1: p.k1,
        k2: p.k2,
        h1,
        h2,
        t: p.t,
        family: p.family,
        memory_ratio,
        rate,
        packets: ours.f,
        baselines,
    })
}

fn published_cells(b: &Baseline) -> (String, String) {
    b.published.map_or_else(
        || (String::new(), String::new()),
        |(r, f)| (r.to_string(), f.to_string()),
    )
}

/// Builds every row exactly; rendering happens in [`Table::render`].
pub fn make_table(id: TableId, rows: &[RowParams]) -> Result<Table, AnalysisError> {
    let rows = rows
        .iter()
        .map(|p| build_row(id, p))
        .collect::<Result<_, _>>()?;
    Ok(Table { id, rows })
}

impl Table {
    /// Decimal places used for rates.
    pub fn places(&self) -> u32 {
        match self.id {
            TableId::MnVsOurs => 4,
            _ => 3,
        }
    }

    pub fn header(&self) -> Vec<&'static str> {
        match self.id {
            TableId::MnVsOurs => vec!["K", "K1", "K2", "R", "R_MN", "F", "F_MN"],
            TableId::Table2 => vec![
                "K",
                "K1",
                "K2",
                "h1",
                "h2",
                "t",
                "M/N",
                "R",
                "R_MMN",
                "F",
                "F_MMN",
                "R_MMN_ref",
                "F_MMN_ref",
            ],
            TableId::Table3 => vec![
                "K",
                "K1",
                "K2",
                "t",
                "q",
                "m",
                "M/N",
                "R_Mle2",
                "R",
                "R_MMN",
                "F_Mle2",
                "F",
                "F_MMN",
                "R_MMN_ref",
                "F_MMN_ref",
            ],
        }
    }

    /// Every row as display strings, in [`Table::header`] order.
    pub fn cells(&self) -> Vec<Vec<String>> {
        let places = self.places();
        let dec = |x: &BigRational| render_decimal(x, places);
        self.rows
            .iter()
            .map(|row| {
                let base = |kind| row.baseline(kind).expect("baseline present for this table");
                match self.id {
                    TableId::MnVsOurs => {
                        let mn = base(BaselineKind::Mn);
                        vec![
                            row.k.to_string(),
                            row.k1.to_string(),
                            row.k2.to_string(),
                            dec(&row.rate),
                            dec(&mn.rate),
                            row.packets.to_string(),
                            mn.packets.to_string(),
                        ]
                    }
                    TableId::Table2 => {
                        let mn = base(BaselineKind::MnShared);
                        let (ref_r, ref_f) = published_cells(mn);
                        vec![
                            row.k.to_string(),
                            row.k1.to_string(),
                            row.k2.to_string(),
                            row.h1.to_string(),
                            row.h2.to_string(),
                            row.t.to_string(),
                            render_fraction(&row.memory_ratio),
                            dec(&row.rate),
                            dec(&mn.rate),
                            row.packets.to_string(),
                            mn.packets.to_string(),
                            ref_r,
                            ref_f,
                        ]
                    }
                    TableId::Table3 => {
                        let le2 = base(BaselineKind::Lemma2Shared);
                        let mn = base(BaselineKind::MnShared);
                        let (ref_r, ref_f) = published_cells(mn);
                        let (q, m) = row.family.expect("three-way rows carry a family");
                        vec![
                            row.k.to_string(),
                            row.k1.to_string(),
                            row.k2.to_string(),
                            row.t.to_string(),
                            q.to_string(),
                            m.to_string(),
                            render_fraction(&row.memory_ratio),
                            dec(&le2.rate),
                            dec(&row.rate),
                            dec(&mn.rate),
                            le2.packets.to_string(),
                            row.packets.to_string(),
                            mn.packets.to_string(),
                            ref_r,
                            ref_f,
                        ]
                    }
                }
            })
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.header().join(",");
        out.push('\n');
        for row in self.cells() {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_markdown(&self) -> String {
        let header = self.header();
        let mut out = format!("| {} |\n", header.join(" | "));
        out.push('|');
        for _ in &header {
            out.push_str("---:|");
        }
        out.push('\n');
        for row in self.cells() {
            out.push_str(&format!("| {} |\n", row.join(" | ")));
        }
        out
    }

    pub fn render(&self, format: TableFormat) -> String {
        match format {
            TableFormat::Csv => self.to_csv(),
            TableFormat::Markdown => self.to_markdown(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_and_formats_parse() {
        assert_eq!("table3".parse::<TableId>().unwrap(), TableId::Table3);
        assert_eq!(TableId::MnVsOurs.to_string(), "mn_vs_ours");
        assert!("table9".parse::<TableId>().is_err());
        assert_eq!("md".parse::<TableFormat>().unwrap(), TableFormat::Markdown);
        assert!("xml".parse::<TableFormat>().is_err());
    }

    #[test]
    fn first_row_of_mn_table() {
        let t = make_table(TableId::MnVsOurs, &default_rows(TableId::MnVsOurs)).unwrap();
        assert_eq!(t.rows.len(), 8);
        assert_eq!(
            t.cells()[0],
            ["6", "4", "2", "1.0000", "0.7500", "12", "20"]
        );
        let csv = t.to_csv();
        assert!(csv.starts_with("K,K1,K2,R,R_MN,F,F_MN\n6,4,2,1.0000,0.7500,12,20\n"));
        let md = t.to_markdown();
        assert!(md.starts_with("| K | K1 | K2 | R | R_MN | F | F_MN |\n|---:|"));
    }

    #[test]
    fn ratios_are_exact_quotients() {
        let t = make_table(TableId::MnVsOurs, &[RowParams::new(4, 2, 2)]).unwrap();
        let row = &t.rows[0];
        assert_eq!(
            row.rate_ratio(BaselineKind::Mn).unwrap(),
            BigRational::new(4.into(), 3.into())
        );
        assert_eq!(
            row.packet_ratio(BaselineKind::Mn).unwrap(),
            BigRational::new(3.into(), 5.into())
        );
        assert!(row.rate_ratio(BaselineKind::MnShared).is_none());
    }

    #[test]
    fn three_way_needs_matching_family() {
        let bad = RowParams::new(12, 6, 9).with_family(5, 2);
        assert!(make_table(TableId::Table3, &[bad]).is_err());
        assert!(make_table(TableId::Table3, &[RowParams::new(12, 6, 9)]).is_err());
    }

    #[test]
    fn invalid_rows_error() {
        assert!(make_table(TableId::Table2, &[RowParams::new(4, 6, 2)]).is_err());
        assert!(make_table(TableId::MnVsOurs, &[RowParams::new(12, 6, 9)]).is_err());
    }
}
