#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eds/diophantine.hpp"
#include "eds/spec.hpp"

namespace eds {

struct PowerVerdict {
    enum class Kind { Always, Never, Conditional, ZeroTerm } kind;
    Power power;
    int modulus;                               // residue modulus of the classification
    std::optional<std::string> condition_id;   // present iff Conditional
    std::string note;                          // the surviving signed product, for display
};

int classifier_modulus(int rank, Power power);

// Verdict for one residue class, derived from the term factorization: reduce
// the exponent vector mod 2 (squares) or mod 3 (cubes), track the sign, and
// resolve the surviving product against the condition catalogue.
PowerVerdict classify(int rank, int residue, Power power);

// The same verdicts as a fixed table; classify() must agree with this.
PowerVerdict classify_transcribed(int rank, int residue, Power power);

// predicted: the verdict evaluated at alpha. actual: exact square/cube test
// of the term itself.
std::pair<bool, bool> predict_and_check(const EdsSpec& spec, unsigned long n, Power power);

struct SummaryRow {
    int residue;
    PowerVerdict verdict;
};

std::vector<SummaryRow> summary_table(int rank, Power power);

std::string render_summary_table(int rank, Power power);
std::string summary_table_csv(int rank, Power power);

}  // namespace eds
