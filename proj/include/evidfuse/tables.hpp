#pragma once

#include "evidfuse/io.hpp"

namespace evidfuse::tables {

// Embedded golden inputs, also shipped as files under data/.
EvidenceDocument example1();        // two highly conflicting sensors, |frame| = 3
EvidenceDocument example2();        // three sensors with composite focal elements
EvidenceDocument example3();        // five sensors, one dissenting, |frame| = 3
DiagnosisDocument fault_diagnosis();// four fault types x four entropy features, five sensors

}  // namespace evidfuse::tables
