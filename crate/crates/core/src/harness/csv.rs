//! Flat-file rendering of regret curves.
//!
//! One row per (scenario, algorithm, checkpoint). The `log2_t` column is
//! exact for power-of-two times so downstream plots can key on it.

use std::io::Write as _;
use std::path::Path;

use crate::harness::runner::CurveSummary;

pub const CSV_HEADER: &str = "scenario,algorithm,t,log2_t,mean_regret,std_regret,runs";

/// Renders a float with 6 significant digits in fixed notation, so 0.5
/// becomes "0.500000" and 1234.5 becomes "1234.50".
fn format_sig(value: f64) -> String {
    if value == 0.0 {
        return "0.000000".to_string();
    }
    let exponent = value.abs().log10().floor() as i32;
    let decimals = (5 - exponent).max(0) as usize;
    let scale = 10f64.powi(5 - exponent);
    format!("{:.decimals$}", (value * scale).round() / scale)
}

fn format_log2(time: u64) -> String {
    if time.is_power_of_two() {
        time.trailing_zeros().to_string()
    } else {
        format_sig((time as f64).log2())
    }
}

/// Renders the cells as CSV bytes, header first.
pub fn emit_csv(cells: &[CurveSummary]) -> Vec<u8> {
    let mut out = Vec::new();
    // Writing into a Vec cannot fail.
    writeln!(out, "{CSV_HEADER}").unwrap();
    for cell in cells {
        for point in &cell.points {
            writeln!(
                out,
                "{},{},{},{},{},{},{}",
                cell.scenario,
                cell.algorithm,
                point.time,
                format_log2(point.time),
                format_sig(point.mean_regret),
                format_sig(point.std_regret),
                point.runs
            )
            .unwrap();
        }
    }
    out
}

/// Writes the rendered CSV to a file.
pub fn write_csv(path: &Path, cells: &[CurveSummary]) -> std::io::Result<()> {
    std::fs::write(path, emit_csv(cells))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::runner::CurvePoint;
    use crate::harness::scenario::Algorithm;

    #[test]
    fn rendering_matches_the_golden_bytes() {
        let cells = vec![CurveSummary {
            scenario: "demo".to_string(),
            algorithm: Algorithm::Sparring,
            points: vec![
                CurvePoint {
                    time: 8,
                    mean_regret: 1.25,
                    std_regret: 0.5,
                    runs: 3,
                },
                CurvePoint {
                    time: 10,
                    mean_regret: 2.0,
                    std_regret: 0.0,
                    runs: 3,
                },
            ],
        }];
        let expected = "scenario,algorithm,t,log2_t,mean_regret,std_regret,runs\n\
                        demo,sparring,8,3,1.25000,0.500000,3\n\
                        demo,sparring,10,3.32193,2.00000,0.000000,3\n";
        assert_eq!(String::from_utf8(emit_csv(&cells)).unwrap(), expected);
    }

    #[test]
    fn floats_keep_six_significant_digits_across_magnitudes() {
        assert_eq!(format_sig(0.0), "0.000000");
        assert_eq!(format_sig(0.0497), "0.0497000");
        assert_eq!(format_sig(0.5), "0.500000");
        assert_eq!(format_sig(1.25), "1.25000");
        assert_eq!(format_sig(123.4567), "123.457");
        assert_eq!(format_sig(3084.6), "3084.60");
        assert_eq!(format_sig(123456.78), "123457");
        assert_eq!(format_sig(1234567.8), "1234570");
        assert_eq!(format_sig(-1.25), "-1.25000");
    }

    #[test]
    fn empty_input_renders_just_the_header() {
        let bytes = emit_csv(&[]);
        assert_eq!(bytes, format!("{CSV_HEADER}\n").into_bytes());
    }

    #[test]
    fn zero_regret_at_time_two_renders_compact_log_and_padded_zero() {
        let cells = vec![CurveSummary {
            scenario: "z".to_string(),
            algorithm: Algorithm::MultiSbm,
            points: vec![CurvePoint {
                time: 2,
                mean_regret: 0.0,
                std_regret: 0.0,
                runs: 1,
            }],
        }];
        let text = String::from_utf8(emit_csv(&cells)).unwrap();
        assert!(
            text.contains("z,multisbm,2,1,0.000000,0.000000,1\n"),
            "{text}"
        );
    }

    #[test]
    fn files_round_trip() {
        let dir = std::env::temp_dir().join("duelband-csv-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("demo.csv");
        let cells = vec![CurveSummary {
            scenario: "demo".to_string(),
            algorithm: Algorithm::Doubler,
            points: vec![CurvePoint {
                time: 4,
                mean_regret: 0.125,
                std_regret: 0.25,
                runs: 2,
            }],
        }];
        write_csv(&path, &cells).unwrap();
        assert_eq!(std::fs::read(&path).unwrap(), emit_csv(&cells));
        std::fs::remove_file(&path).unwrap();
    }
}
