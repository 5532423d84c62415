#include "admrank/svg.hpp"

#include "admrank/errors.hpp"
#include "admrank/labels.hpp"
#include "admrank/rank.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace admrank {

namespace {

constexpr double kWidth = 800.0, kHeight = 120.0;

double compactify(double lambda) {
    return kWidth / 2.0 + (kWidth / M_PI) * std::atan(lambda);
}

const char* kPalette[] = {"#4c78a8", "#f58518", "#54a24b", "#e45756", "#72b7b2", "#b279a2"};

} // namespace

std::string partition_svg(const BinaryForm& f) {
    const int k = complex_rank(f);
    ApolarSystem sys = apolar_system(f, k);
    if (sys.dim() != 2)
        throw NotAPencilError("apolar system at the rank level has dim " +
                              std::to_string(sys.dim()) + ", not 2");
    PencilPartition part = pencil_partition(sys.basis[0], sys.basis[1]);

    // assign a color per distinct label
    std::map<Label, std::string> color;
    for (const auto& s : part.samples) {
        if (!s.squarefree) continue;
        Label l = label_of_form(s.member, RealStructure::Standard);
        if (!color.count(l)) color[l] = kPalette[color.size() % 6];
    }

    std::ostringstream svg;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth << "' height='" << kHeight
        << "' viewBox='0 0 " << kWidth << " " << kHeight << "'>\n";
    svg << "<rect width='" << kWidth << "' height='" << kHeight << "' fill='white'/>\n";

    const double axis_y = 70.0;

    // tick positions (approximate the roots by their interval midpoints)
    std::vector<double> ticks;
    for (const auto& iv : part.roots)
        ticks.push_back(compactify(Rat((iv.lo + iv.hi) / 2).get_d()));

    // colored interval bands between consecutive ticks (and the two ends)
    std::vector<double> cuts{0.0};
    for (double t : ticks) cuts.push_back(t);
    cuts.push_back(kWidth);
    size_t band = 0;
    for (const auto& s : part.samples) {
        if (s.at_infinity) continue;
        if (band + 1 >= cuts.size()) break;
        double x0 = cuts[band], x1 = cuts[band + 1];
        ++band;
        if (!s.squarefree) continue;
        Label l = label_of_form(s.member, RealStructure::Standard);
        svg << "<rect x='" << x0 << "' y='" << axis_y - 14 << "' width='" << (x1 - x0)
            << "' height='28' fill='" << color[l] << "' fill-opacity='0.45'/>\n";
        svg << "<text x='" << (x0 + x1) / 2 << "' y='" << axis_y - 20
            << "' font-size='11' text-anchor='middle'>" << l.str() << "</text>\n";
        svg << "<text x='" << (x0 + x1) / 2 << "' y='" << axis_y + 30
            << "' font-size='9' text-anchor='middle'>&#955;=" << format_rational(s.lambda)
            << "</text>\n";
    }

    svg << "<line x1='0' y1='" << axis_y << "' x2='" << kWidth << "' y2='" << axis_y
        << "' stroke='black'/>\n";
    for (double t : ticks)
        svg << "<line x1='" << t << "' y1='" << axis_y - 8 << "' x2='" << t << "' y2='"
            << axis_y + 8 << "' stroke='black' stroke-width='1.5'/>\n";

    svg << "<text x='6' y='14' font-size='12'>" << f.str()
        << " : discriminant partition of the apolar pencil</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

} // namespace admrank
