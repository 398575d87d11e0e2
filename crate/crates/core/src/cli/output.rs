use std::fs;
use std::io;
use std::path::Path;

use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter};

use crate::error::{Error, Result};
use crate::predict::Decision;

/// Pretty JSON whose floats are written by [`fmt6`].
struct SixDecimals<'a>(PrettyFormatter<'a>);

impl Formatter for SixDecimals<'_> {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(fmt6(value).as_bytes())
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        writer.write_all(fmt6(value as f64).as_bytes())
    }

    fn begin_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_array(w)
    }

    fn end_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array(w)
    }

    fn begin_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_array_value(w, first)
    }

    fn end_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array_value(w)
    }

    fn begin_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object(w)
    }

    fn end_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object(w)
    }

    fn begin_object_key<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_object_key(w, first)
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object_value(w)
    }

    fn end_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object_value(w)
    }
}

pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SixDecimals(PrettyFormatter::new()));
    value.serialize(&mut ser)?;
    buf.push(b'\n');
    Ok(String::from_utf8(buf).expect("serde_json writes UTF-8"))
}

/// Six decimals; values too small to survive that (such as a convergence
/// tolerance) switch to scientific notation with six decimals.
pub fn fmt6(x: f64) -> String {
    if x != 0.0 && x.abs() < 1e-4 {
        format!("{x:.6e}")
    } else {
        format!("{x:.6}")
    }
}

pub fn opt6(x: Option<f64>) -> String {
    x.map(fmt6).unwrap_or_default()
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent).map_err(|e| Error::io(parent, e))?;
    }
    fs::write(path, contents).map_err(|e| Error::io(path, e))
}

/// Writes a CSV file from a header and string rows.
pub fn write_csv<R, I>(path: &Path, header: &[&str], rows: R) -> Result<()>
where
    R: IntoIterator<Item = I>,
    I: IntoIterator<Item = String>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row.into_iter().collect::<Vec<_>>())?;
    }
    let bytes = w.into_inner().map_err(|e| Error::io(path, e.into_error()))?;
    write_file(path, std::str::from_utf8(&bytes).expect("csv of UTF-8 strings"))
}

pub fn write_predictions(path: &Path, decisions: &[Decision]) -> Result<()> {
    let flag = |b: bool| if b { "1" } else { "0" }.to_string();
    let rows = decisions.iter().flat_map(|d| {
        d.candidates.iter().enumerate().map(move |(i, talk)| {
            vec![
                d.participant.clone(),
                d.slot.clone(),
                talk.clone(),
                fmt6(d.scores[i]),
                fmt6(d.normalized[i]),
                flag(*talk == d.predicted),
                flag(*talk == d.attended),
                flag(d.tie),
            ]
        })
    });
    write_csv(
        path,
        &["participant", "slot", "talk", "raw_score", "norm_score", "predicted", "correct", "tie"],
        rows,
    )
}
