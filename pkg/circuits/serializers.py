from rest_framework import serializers

from circuits.exceptions import UnknownGateError
from circuits.gates import builtin_gate
from circuits.models import Circuit, Gate
from core.exceptions import QrfException
from tensors.models import SystemLayout
from tensors.serializers import MatrixField


class LayoutSerializer(serializers.Serializer):
    labels = serializers.ListField(child=serializers.CharField(), min_length=1)
    dims = serializers.ListField(child=serializers.IntegerField(min_value=1), source="local_dims", min_length=1)

    def validate(self, attrs):
        if len(attrs["labels"]) != len(attrs["local_dims"]):
            raise serializers.ValidationError("labels and dims must have the same length")
        if len(set(attrs["labels"])) != len(attrs["labels"]):
            raise serializers.ValidationError("labels must be unique")
        return attrs

    def create(self, validated_data):
        return SystemLayout(tuple(validated_data["labels"]), tuple(validated_data["local_dims"]))


class GateOriginSerializer(serializers.Serializer):
    kind = serializers.CharField()
    frame = serializers.CharField(allow_null=True)
    source = serializers.CharField(allow_null=True)
    source_index = serializers.IntegerField(allow_null=True)


class GateSerializer(serializers.Serializer):
    name = serializers.CharField(required=False)
    support = serializers.ListField(child=serializers.CharField(), min_length=1)
    matrix = MatrixField(required=False)
    builtin = serializers.CharField(required=False, write_only=True)
    origin = GateOriginSerializer(read_only=True)

    def validate(self, attrs):
        has_matrix = "matrix" in attrs
        has_builtin = "builtin" in attrs
        if has_matrix == has_builtin:
            raise serializers.ValidationError("A gate needs exactly one of matrix or builtin")
        if has_builtin:
            try:
                name, matrix = builtin_gate(attrs.pop("builtin"))
            except UnknownGateError as ex:
                raise serializers.ValidationError({"builtin": ex.detail})
            attrs.setdefault("name", name)
            attrs["matrix"] = matrix
        attrs.setdefault("name", "U")
        return attrs


class CircuitSerializer(serializers.Serializer):
    layout = LayoutSerializer()
    frame = serializers.CharField()
    gates = GateSerializer(many=True)

    def validate(self, attrs):
        layout_data = attrs["layout"]
        if attrs["frame"] not in layout_data["labels"]:
            raise serializers.ValidationError({"frame": f"{attrs['frame']!r} is not a layout label"})
        try:
            layout = SystemLayout(tuple(layout_data["labels"]), tuple(layout_data["local_dims"]))
            gates = tuple(Gate(g["name"], tuple(g["support"]), g["matrix"]) for g in attrs["gates"])
            attrs["circuit"] = Circuit(layout, gates, attrs["frame"])
        except QrfException as ex:
            raise serializers.ValidationError({"gates": ex.detail})
        return attrs

    def create(self, validated_data):
        return validated_data["circuit"]


class ComplexityReportSerializer(serializers.Serializer):
    old_frame = serializers.CharField()
    new_frame = serializers.CharField()
    n_ent = serializers.DictField(child=serializers.IntegerField())
    n_ent_old = serializers.IntegerField()
    n_ent_new = serializers.IntegerField()
    n_generic_locals = serializers.IntegerField()
    bound = serializers.IntegerField()
    saturated = serializers.BooleanField()
    generic_sources = serializers.ListField(child=serializers.CharField())
