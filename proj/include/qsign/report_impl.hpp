#pragma once

#include "qsign/errors.hpp"

#include <fstream>
#include <ostream>

namespace qsign {

template <typename Writer>
void with_destination(const std::string& destination, std::ostream& out, Writer&& writer)
{
    if (destination == "-") {
        writer(out);
        out.flush();
        return;
    }
    std::ofstream file(destination, std::ios::binary | std::ios::trunc);
    if (!file)
        throw UsageError("cannot open '" + destination + "' for writing");
    writer(file);
    file.flush();
    if (!file)
        throw UsageError("write to '" + destination + "' failed");
}

}  // namespace qsign
