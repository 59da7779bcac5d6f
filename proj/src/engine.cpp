#include "bwm/engine.hpp"

namespace bwm {

template class Engine<ExactRing>;
template class Engine<ModularRing>;

}  // namespace bwm
