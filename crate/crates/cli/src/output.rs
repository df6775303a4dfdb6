use serde::Serialize;

use crate::config::Format;
use crate::error::CliError;

/// CSV with a header row. Floats use the shortest round-tripping form.
pub fn render_csv<T: Serialize>(records: &[T]) -> Result<String, CliError> {
    let mut writer = csv::WriterBuilder::new()
        .quote_style(csv::QuoteStyle::Necessary)
        .from_writer(Vec::new());
    for record in records {
        writer.serialize(record)?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| CliError::Serialize(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Serialize(e.to_string()))
}

/// A JSON array of flat records, one per line.
pub fn render_json<T: Serialize>(records: &[T]) -> Result<String, CliError> {
    let mut out = String::from("[");
    for (i, record) in records.iter().enumerate() {
        out.push_str(if i == 0 { "\n  " } else { ",\n  " });
        out.push_str(&serde_json::to_string(record)?);
    }
    out.push_str(if records.is_empty() { "]\n" } else { "\n]\n" });
    Ok(out)
}

pub fn render<T: Serialize>(records: &[T], format: Format) -> Result<String, CliError> {
    match format {
        Format::Csv => render_csv(records),
        Format::Json => render_json(records),
    }
}
