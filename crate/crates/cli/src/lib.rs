//! JSON front end for `ncinterp`: one job per invocation, exact rational
//! strings in and out.

pub mod diagnostic;
pub mod job;

pub use diagnostic::Diagnostic;
pub use job::{Command, JobRequest, Method, Options, Payload};

/// Everything a finished invocation writes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

/// Run one job on `input`. With `decimal = Some(d)` the exact result is
/// wrapped together with a `d`-digit approximation.
pub fn execute(command: Command, input: &str, options: Options, decimal: Option<usize>) -> Outcome {
    let result = JobRequest::parse(command, input, options).and_then(|job| job.run());
    match result {
        Ok(value) => {
            let doc = match decimal {
                None => value,
                Some(digits) => serde_json::json!({
                    "result": &value,
                    "approximation": { "digits": digits, "value": job::approximate(&value, digits) },
                }),
            };
            Outcome { stdout: job::to_pretty(&doc), stderr: String::new(), exit_code: 0 }
        }
        Err(d) => Outcome { stdout: String::new(), stderr: format!("{}\n", d.to_json()), exit_code: d.exit_code() },
    }
}
