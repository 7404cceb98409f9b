#!/usr/bin/env python3

"""
Exceptions raised by elab. Every error derives from ElabError so callers \
    can catch all of them at once; errors caused by bad input values also \
    derive from ValueError. Anything else escaping elab is a bug.
Greg Conan: gregmconan@gmail.com
Created: 2026-10-19
Updated: 2026-10-19
"""

# NOTE All classes below are in alphabetical order after ElabError.


class ElabError(Exception):
    """ Base class of every error that elab raises on purpose. """


class BasePointMismatch(ElabError, ValueError):
    """ Two horizontal vectors at different points were combined. """


class BasisFailure(ElabError):
    """ V, W, [V,W], [W,[V,W]] do not span the tangent space. """


class CloudFormatError(ElabError, ValueError):
    """ A saved cloud CSV or its sidecar is missing columns or values. """


class ConfigError(ElabError, ValueError):
    """ A config file or ELAB_SEED cannot be read as a RunConfig. """


class ConstraintViolation(ElabError, ValueError):
    """ A normal-form coefficient contains a forbidden monomial. """


class DegenerateFrame(ElabError):
    """ The two frame fields are linearly dependent at a point. """


class EmptySlab(ElabError):
    """ No cloud endpoint qualified for the abnormal boundary probe. """


class FrameMismatch(ElabError, ValueError):
    """ Data or a command does not match the frame it is used with. """


class NoBoundaryHit(ElabError):
    """ A characteristic never reached its initial surface in time. """


class NonDifferentiable(ElabError):
    """ A characteristic solution was differentiated at a fold point. """


class NotNonspacelike(ElabError, ValueError):
    """ A control or velocity is spacelike or past directed. """


class RegionViolation(ElabError):
    """ A curve left the region a check was restricted to. """


class SeedMismatch(ElabError):
    """ Two clouds compared sample-by-sample came from different draws. """


class StepFailure(ElabError):
    """ The adaptive step controller underflowed or the solver failed. """


class UnknownRegion(ElabError, ValueError, KeyError):
    """ A region name is not one of A11..A24 or WeakGeneral. """


class ZDependence(ElabError, ValueError):
    """ phi or psi2 depends on z, so the frame does not project. """
